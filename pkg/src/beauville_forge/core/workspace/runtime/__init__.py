from .engine import EXIT_FAIL, EXIT_OK, EXIT_UNDETERMINED, EXIT_USAGE, BeauvilleEngine, RunItem, RunReport

__all__ = [
    "EXIT_OK",
    "EXIT_FAIL",
    "EXIT_UNDETERMINED",
    "EXIT_USAGE",
    "BeauvilleEngine",
    "RunItem",
    "RunReport",
]
