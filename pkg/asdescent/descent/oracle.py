from itertools import product
from logging import getLogger

from ..artin_schreier import ASTower, tower_valuation
from ..base_fields import RationalFunction
from ..errors import SearchSpaceTooLarge

logger = getLogger("asdescent")

MAX_CANDIDATES = 10**6


def brute_force_membership(
    a: RationalFunction, tower: ASTower, pole_bound: int, exponent: int = 1
) -> bool:
    """
    Exhaustively decide whether a - h^(p^N) is integral at every tracked
    place for some h = sum c_ij pi_i^-j with 1 <= j <= pole_bound.

    Independent of the normal form and killing code; meant for tests on
    tiny inputs.

    Raises
    ------
    SearchSpaceTooLarge
        If there are more than 10^6 candidates.
    """
    field = tower.field
    if pole_bound < 0 or exponent < 1:
        raise ValueError("pole_bound must be non-negative and exponent positive")
    basis = [
        tracked.inverse_uniformizer() ** j
        for tracked in tower.tracked
        for j in range(1, pole_bound + 1)
    ]
    candidates = field.q ** len(basis)
    if candidates > MAX_CANDIDATES:
        raise SearchSpaceTooLarge(
            f"{candidates} candidates exceed the limit of {MAX_CANDIDATES}"
        )

    # (sum c b)^(p^N) = sum c^(p^N) b^(p^N)
    powers = [b.frobenius(exponent) for b in basis]
    target = tower.element(a)
    zero = tower.element(0)
    for coefficients in product(field.elements(), repeat=len(basis)):
        value = zero
        for c, power in zip(coefficients, powers):
            if c:
                value = value + power * RationalFunction.constant(
                    field, field.pow(c, field.p**exponent)
                )
        difference = target - value
        if all(tower_valuation(difference, tracked) >= 0 for tracked in tower.tracked):
            logger.debug(f"Found a witness with coefficients {coefficients}")
            return True
    return False
