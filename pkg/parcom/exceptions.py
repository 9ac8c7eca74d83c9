"""
Base exceptions for parcom.

This module defines the exception hierarchy for the engine, providing
standardized error handling across graph storage, quality measures,
detection algorithms, file formats and the command line.
"""
from typing import Optional, Dict, Any


class ParcomError(Exception):
    """Base exception for all engine errors."""

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        """Initialize the base error.

        Args:
            message: Human-readable error description
            error_code: Unique error identifier (e.g., 'GRF001')
            details: Additional error context
        """
        self.message = message
        self.error_code = error_code or 'PAR000'
        self.details = details or {}
        super().__init__(f"[{self.error_code}] {message}")


class GraphError(ParcomError):
    """Base exception for graph construction and access errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'GRF000'
        super().__init__(message, error_code, details)


class InvalidNodeError(GraphError):
    """Raised when a node id lies outside [0, n)."""
    def __init__(self, node: int, node_count: int, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            f"Node {node} out of range for graph with {node_count} nodes",
            'GRF001',
            details
        )


class DuplicateEdgeError(GraphError):
    """Raised when an unordered node pair occurs more than once."""
    def __init__(self, u: int, v: int, details: Optional[Dict[str, Any]] = None):
        self.u = u
        self.v = v
        super().__init__(f"Duplicate edge {{{u}, {v}}}", 'GRF002', details)


class InvalidWeightError(GraphError):
    """Raised for nonpositive or non-finite edge weights."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'GRF003', details)


class IsolatedNodeError(GraphError):
    """Raised when an operation needs a node with at least one neighbor."""
    def __init__(self, node: int, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"Node {node} has no neighbors", 'GRF004', details)


class PartitionError(ParcomError):
    """Base exception for partition errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'PRT000'
        super().__init__(message, error_code, details)


class PartitionMismatchError(PartitionError):
    """Raised when a partition does not cover the node set it is used with."""
    def __init__(self, expected: int, actual: int, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            f"Partition covers {actual} nodes, expected {expected}",
            'PRT001',
            details
        )


class NonCompactPartitionError(PartitionError):
    """Raised when community ids are not consecutive in [0, k)."""
    def __init__(self, message: str = "Partition is not compacted", details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'PRT002', details)


class MappingRangeError(PartitionError):
    """Raised when a fine-to-coarse map points outside the coarse partition."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'PRT003', details)


class QualityError(ParcomError):
    """Base exception for quality measure errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'QLT000'
        super().__init__(message, error_code, details)


class UndefinedQualityError(QualityError):
    """Raised when a measure is undefined for the input (zero weight, no edges)."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'QLT001', details)


class DetectionError(ParcomError):
    """Base exception for community detection errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'DET000'
        super().__init__(message, error_code, details)


class InvariantViolationError(DetectionError):
    """Raised when an internal consistency check fails."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'DET001', details)


class UnknownAlgorithmError(DetectionError):
    """Raised when an algorithm selector is not registered."""
    def __init__(self, name: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(f"Unknown algorithm '{name}'", 'DET002', details)


class FormatError(ParcomError):
    """Base exception for file format errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'FMT000'
        super().__init__(message, error_code, details)


class MetisFormatError(FormatError):
    """Raised for malformed METIS graph files."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'FMT001', details)


class EdgeListFormatError(FormatError):
    """Raised for malformed edge list files."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'FMT002', details)


class PartitionFormatError(FormatError):
    """Raised for malformed partition files."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'FMT003', details)


class ConfigurationError(ParcomError):
    """Base exception for configuration errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'CFG000'
        super().__init__(message, error_code, details)


class ValidationError(ConfigurationError):
    """Raised for configuration validation errors."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'CFG001', details)


class GeneratorError(ParcomError):
    """Base exception for synthetic graph generation errors."""
    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        error_code = error_code or 'GEN000'
        super().__init__(message, error_code, details)


class GeneratorParameterError(GeneratorError):
    """Raised when generator parameters are out of range."""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, 'GEN001', details)
