from .documents import DocumentFactory, PlantedEnv, generate_document
from .graphs import all_dags, create_graph, create_node, random_dag, random_digraph

__all__ = [
    "DocumentFactory",
    "PlantedEnv",
    "all_dags",
    "create_graph",
    "create_node",
    "generate_document",
    "random_dag",
    "random_digraph",
]
