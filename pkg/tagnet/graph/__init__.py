"""Graph API"""

from .components import ComponentLabeling, connected_components
from .construction import BuildStats, build_cooccurrence_graph
from .snapshot import load_snapshot, save_snapshot
from .tag_graph import TagGraph, TagTable, degree
