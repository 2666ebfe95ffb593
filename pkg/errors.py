import settings as st


class LamplighterError(Exception):
    exit_code = 1


class RejectedInputError(LamplighterError, ValueError):
    exit_code = st.EXIT_USAGE


class ResourceCapError(LamplighterError):
    """Raised when a ball, frontier or solver input outgrows its cap."""
    exit_code = st.EXIT_CAP

    def __init__(self, message, cap_name=None, cap=None, lower_bound=None):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap = cap
        self.lower_bound = lower_bound


class VerificationError(LamplighterError):
    exit_code = st.EXIT_VERIFY


class InternalError(LamplighterError):
    pass


class BoundExceededError(LamplighterError):
    """No walk exists within the oracle's length bound."""

    def __init__(self, max_len):
        super().__init__(f"no covering walk of at most {max_len} edges")
        self.max_len = max_len
