"""Exception types shared across the package."""


class InputError(Exception):
    """Bad user input: malformed files, broken algebraic laws, exceeded caps."""


class ValidationError(InputError):
    """An algebraic law or structural invariant fails; message carries a witness."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", col {column}"
            where += ": "
        super().__init__(where + message)


class CapExceeded(InputError):
    """An exhaustive enumeration would exceed the configured size cap."""


class HypothesisError(InputError):
    """A checker's hypothesis fails; the check does not apply, nothing is refuted."""


class IntegrityError(Exception):
    """A cross-check that must hold by theorem failed: a bug, never bad input."""
