"""Identity language, registry, verification and CLI."""

from .evaluator import EvaluationError, evaluate
from .expr import ParseError, parse, to_text
from .limits import ms_limit
from .registry import (IdentityFileError, IdentitySpec, builtin_registry,
                       load_identity_file, parse_identity_file)
from .verify import VerificationReport, verify, verify_all

__all__ = [
    "EvaluationError", "IdentityFileError", "IdentitySpec", "ParseError",
    "VerificationReport", "builtin_registry", "evaluate", "load_identity_file",
    "ms_limit", "parse", "parse_identity_file", "to_text", "verify", "verify_all",
]
