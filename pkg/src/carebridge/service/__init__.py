from .stores import FileStore, MemoryStore, StoreAdapter, StoreSnapshot
from .config import Config, load_config

__all__ = [
    "FileStore",
    "MemoryStore",
    "StoreAdapter",
    "StoreSnapshot",
    "Config",
    "load_config",
]
