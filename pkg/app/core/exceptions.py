class RigException(Exception):
    pass


class ValidationException(RigException):
    pass


class InvalidParameterException(ValidationException):
    pass


class InvalidQueryException(ValidationException):
    pass


class MismatchedResultException(ValidationException):
    pass


class DisconnectedGraphException(ValidationException):
    pass


class ConfigurationException(RigException):
    pass


class CapExceededException(RigException):
    """
    Raised when an instance is larger than the size cap of an exact method.

    Attributes:
        size (int): Size of the offending instance
        cap (int): Configured cap
    """

    def __init__(self, what: str, size: int, cap: int) -> None:
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class VerificationFailedException(RigException):
    pass
