"""Exception types shared across the package."""


class DescriptorError(ValueError):
    """A word descriptor string could not be parsed or validated."""


class InsufficientWindowError(RuntimeError):
    """A windowed computation saw too little of the word to answer."""
