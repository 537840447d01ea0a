class AlgebraError(ValueError):
    """Domain error: the input is well-formed but the operation is undefined for it."""


class TableParseError(AlgebraError):
    """Malformed table or system text, with a 1-based source location."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
