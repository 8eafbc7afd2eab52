"""Exception types shared across the package.

Exit-code mapping used by the CLI: ConfigError -> 2, DataError -> 3.
"""


class AspectMineError(Exception):
    exit_code = 1


class ConfigError(AspectMineError):
    """Bad parameter value, malformed config file or unusable option combination."""

    exit_code = 2


class DataError(AspectMineError):
    """Unreadable or semantically invalid input data."""

    exit_code = 3


class SchemaError(DataError):
    """Interchange-file violation, annotated with its location."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        prefix = ""
        if line is not None:
            prefix += "line %d" % line
        if field is not None:
            prefix += (": " if prefix else "") + "field %r" % field
        super().__init__(("%s: %s" % (prefix, message)) if prefix else message)
