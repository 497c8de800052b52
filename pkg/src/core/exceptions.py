"""Custom exception classes"""
from pathlib import Path
from typing import Optional, Union

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class NetDisruptException(Exception):
    """Base exception for netdisrupt"""
    exit_code: int = EXIT_RUNTIME

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageException(NetDisruptException):
    """Raised when command-line flags or a config file are invalid"""
    exit_code = EXIT_USAGE


# Graph substrate

class GraphException(NetDisruptException):
    """Raised on invalid graph operations"""
    pass


class UnknownNodeException(GraphException):
    """Raised when a node is not a member of the graph"""
    def __init__(self, node: object):
        super().__init__(f"Node {node!r} is not in the graph")
        self.node = node


class DegenerateGraphException(GraphException):
    """Raised when a measure is undefined for the graph size"""
    pass


class OversizeGraphException(GraphException):
    """Raised when a graph exceeds the brute-force oracle bound"""
    def __init__(self, node_count: int, bound: int):
        super().__init__(
            f"Graph has {node_count} nodes; brute-force betweenness is limited to {bound}"
        )
        self.node_count = node_count
        self.bound = bound


class EmptyCandidateException(GraphException):
    """Raised when a strategy has no node left to target"""
    pass


# Generators

class GeneratorException(NetDisruptException):
    """Raised on invalid generator input"""
    pass


class InvalidParameterException(GeneratorException):
    """Raised when generator parameters are out of range"""
    pass


class MissingRoleException(GeneratorException):
    """Raised when no node carries the requested role"""
    pass


class RankOutOfBoundsException(GeneratorException):
    """Raised when a rank profile does not fit the target graph"""
    def __init__(self, rank: int, node_count: int):
        super().__init__(f"Rank {rank} exceeds node count {node_count}")
        self.rank = rank
        self.node_count = node_count


# Datasets

class DatasetException(NetDisruptException):
    """Raised when a dataset cannot be loaded"""
    pass


class DatasetNotFoundException(DatasetException):
    """Raised when a dataset file is missing"""
    def __init__(self, path: Union[str, Path]):
        super().__init__(f"Dataset file not found: {path}")
        self.path = Path(path)


class DatasetParseException(DatasetException):
    """Raised when a dataset row cannot be parsed"""
    def __init__(self, path: Union[str, Path], line: Optional[int], detail: str):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {detail}")
        self.path = Path(path)
        self.line = line


class UnknownRoleException(DatasetParseException):
    """Raised when a role string is outside the attribute taxonomy"""
    pass


class ContradictoryLabelException(DatasetParseException):
    """Raised when one node is given two different roles"""
    pass


class IsolatedNodeException(DatasetException):
    """Raised when attribute-only nodes are present and not admitted"""
    pass
