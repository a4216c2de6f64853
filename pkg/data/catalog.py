"""
All access to the configuration catalog goes through this file.

The catalog is a directory of .cfg files, one configuration each. The
shipped directory sits next to this module; CHOOSE_CATALOG_DIR or an
explicit path replaces it.
"""
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Union

import nullstellensatz.configuration as cfg
import nullstellensatz.formats as nf
import utils
import validation

logger = logging.getLogger(__name__)

SHIPPED_DIR = Path(__file__).resolve().parent / 'catalog'
CATALOG_SUFFIX = '.cfg'


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    configuration: cfg.Configuration
    provenance: str
    path: Path


def catalog_dir(override: Optional[Union[str, Path]] = None) -> Path:
    """
    Priority:
      1) override argument
      2) CHOOSE_CATALOG_DIR
      3) the shipped catalog
    """
    if override:
        return Path(override)
    explicit = os.environ.get('CHOOSE_CATALOG_DIR')
    if explicit:
        return Path(explicit)
    return SHIPPED_DIR


def _provenance(text: str) -> str:
    """Leading comment block of a catalog file, joined into one line."""
    notes = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped.startswith(utils.COMMENT):
            break
        notes.append(stripped.lstrip(utils.COMMENT).strip())
    return ' '.join(n for n in notes if n)


def read_entry(path: Union[str, Path]) -> CatalogEntry:
    path = Path(path)
    text = path.read_text()
    try:
        c = nf.parse_configuration(text, default_name=path.stem)
    except validation.ValidationError as err:
        raise validation.ValidationError(f'{path.name}: {err}') from err
    return CatalogEntry(c.name, c, _provenance(text), path)


def read(directory: Optional[Union[str, Path]] = None) -> List[CatalogEntry]:
    """
    Every entry of the catalog, sorted by name.

    Raises:
        ValidationError: on a missing directory, a bad file or a repeated name
    """
    root = catalog_dir(directory)
    if not root.is_dir():
        raise validation.ValidationError(f'catalog directory {root} does not exist')
    entries = [read_entry(p) for p in sorted(root.glob(f'*{CATALOG_SUFFIX}'))]
    seen = set()
    for entry in entries:
        if entry.name in seen:
            raise validation.ValidationError(f'catalog name {entry.name!r} used twice')
        seen.add(entry.name)
    logger.info('read %d catalog entries from %s', len(entries), root)
    return sorted(entries, key=lambda e: e.name)


def names(directory: Optional[Union[str, Path]] = None) -> List[str]:
    return [entry.name for entry in read(directory)]


def read_one(name: str, directory: Optional[Union[str, Path]] = None) -> CatalogEntry:
    for entry in read(directory):
        if entry.name == name:
            return entry
    raise validation.ValidationError(f'no catalog entry named {name!r}')
