from enum import Enum


class CheckStatus(Enum):
    """
    Outcome of one check in a verification report.

    Attributes
    ----------
    Passed : str
        The check was recomputed and holds.
    Failed : str
        The check was recomputed and does not hold, or could not be
        recomputed from the input.
    Skipped : str
        An earlier failure made the check meaningless.
    """

    Passed = "Passed"
    Failed = "Failed"
    Skipped = "Skipped"
