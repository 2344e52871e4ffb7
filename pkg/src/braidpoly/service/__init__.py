"""Request/response models and handlers shared by the HTTP API and the CLI."""

from .app import app
from .schemas import (
    AlexanderRequest,
    AlexanderResponse,
    CheckRequest,
    CheckResponse,
    CoeffsRequest,
    CoeffsResponse,
    PolyModel,
    ScanRequest,
    SignatureRequest,
    SignatureResponse,
)

__all__ = [
    "app",
    "AlexanderRequest",
    "AlexanderResponse",
    "CheckRequest",
    "CheckResponse",
    "CoeffsRequest",
    "CoeffsResponse",
    "PolyModel",
    "ScanRequest",
    "SignatureRequest",
    "SignatureResponse",
]
