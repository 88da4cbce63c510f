from logging import getLogger
from math import ceil
from typing import List, NamedTuple, Sequence, Tuple

from ..artin_schreier import ASTower, LayerStrategy, TowerElement
from ..base_fields import (
    LocalExpansion,
    Place,
    RationalFunction,
    approximate,
    hensel_sth_root,
    local_expand,
    polar_divisor,
    prescribe_valuations,
)
from ..config import DescentConfig
from ..errors import KillingFailed
from .certificate import CertificateEntry, ExtensionCertificate
from .presentation import TorsorData
from .qclass import TowerReduction, choose_s, normal_form, reduce_in_tower

logger = getLogger("asdescent")


class _Progress(NamedTuple):
    """Working state a = z^(p^depth) + g of one class."""

    a: RationalFunction
    exponent: int
    z: TowerElement
    g: TowerElement
    depth: int

    @property
    def done(self) -> bool:
        return self.depth >= self.exponent


def matched_uniformizer(
    f: RationalFunction, place: Place, s: int, m: int = 1
) -> LocalExpansion:
    """
    Local uniformizer mu at a rational place with f = mu^-s.

    The unit f u^s is expanded to precision mp + (p-1)s + 1 and its s-th
    root w taken by Hensel lifting; then mu = u / w.

    Raises
    ------
    NoResidueRoot
        If the residue of f u^s has no s-th root in F_q.
    NotAUnit
        If v_P(f) is not -s.
    """
    p = place.field.p
    precision = m * p + (p - 1) * s + 1
    u = place.uniformizer()
    unit = local_expand(f * u**s, place, precision)
    root = hensel_sth_root(unit, s)
    return local_expand(u, place, precision + 1) * root.inverse()


def _matching_precision(p: int, s: int, m: int) -> int:
    return m * p + (p - 1) * s + 1


def matched_global_uniformizer(
    f: RationalFunction, places: Sequence[Place], s: Sequence[int], orders: Sequence[int]
) -> RationalFunction:
    """
    One global w that is a matched uniformizer at every place.

    The local roots of ``matched_uniformizer`` are glued by ``approximate``;
    the result satisfies v_i(f w^s_i - 1) >= m_i p + (p-1) s_i + 1.

    Raises
    ------
    NoResidueRoot
        If the residue of f u^s_i has no s_i-th root in F_q at some place.
    KillingFailed
        If the glued element misses the local matching.
    """
    p = places[0].field.p
    precision = [_matching_precision(p, n, max(m, 1)) for n, m in zip(s, orders)]
    targets = [
        (place, matched_uniformizer(f, place, n, max(m, 1)).resum())
        for place, n, m in zip(places, s, orders)
    ]
    w = approximate(targets, max(precision))
    for place, n, bound in zip(places, s, precision):
        if place.valuation(f * w**n - 1) < bound:
            logger.error(f"{w} does not match {f} to precision {bound} at {place}")
            raise KillingFailed(f"Layer {f} is not matched to a uniformizer at {place}")
    return w


def _required_s(orders: Sequence[int], p: int, config: DescentConfig, attempt: int) -> List[int]:
    # places without residual still need a pole prime to p
    return [choose_s(max(m, 1), p, config.min_s) + attempt * p for m in orders]


def layer_function(
    tower: ASTower, orders: Sequence[int], config: DescentConfig, attempt: int = 0
) -> TowerElement:
    """
    Defining function of the next layer for residual pole orders ``orders``.

    ``LayerStrategy.Uniformizer`` takes prescribe_valuations(P_i, -s_i) at
    the first layer and the sum of pi_i^-s_i over the tracked places above.
    ``LayerStrategy.Boundary`` takes a polar divisor at the first layer and
    x_k r above it, with r a polar divisor in F_q(t), so that
    every layer function is integral away from the tracked places.
    """
    p = tower.field.p
    required = _required_s(orders, p, config, attempt)
    if config.layer_strategy == LayerStrategy.Uniformizer:
        if tower.length == 0:
            return TowerElement.of(
                prescribe_valuations(tower.places, [-s for s in required])
            )
        f = tower.element(0)
        for tracked, s in zip(tower.tracked, required):
            f = f + tracked.inverse_uniformizer() ** s
        return f

    k = tower.length
    if k == 0:
        return TowerElement.of(polar_divisor(tower.places, required))
    # v(x_k r) = -(s_k + p^k n) stays prime to p
    n = [
        max(1, ceil((s - tracked.layers[-1].s) / p**k))
        for tracked, s in zip(tower.tracked, required)
    ]
    return tower.generator(k) * polar_divisor(tower.places, n)


def _extend_until_clean(
    tower: ASTower,
    targets: Sequence[TowerElement],
    orders: Sequence[int],
    config: DescentConfig,
) -> Tuple[ASTower, List[TowerReduction]]:
    p = tower.field.p
    if tower.degree * p > config.max_tower_degree:
        raise KillingFailed(
            f"Tower degree {tower.degree * p} would exceed {config.max_tower_degree}"
        )
    for attempt in range(config.max_retries + 1):
        f = layer_function(tower, orders, config, attempt)
        extended = tower.extend(f)
        reductions = [reduce_in_tower(z, extended) for z in targets]
        if all(reduction.is_clean for reduction in reductions):
            return extended, reductions
        left = [max(r.orders[i] for r in reductions) for i in range(len(orders))]
        s = [tracked.layers[-1].s for tracked in extended.tracked]
        logger.warning(
            f"Layer {extended.length} with s = {s} left residual orders {left}, "
            f"retrying with larger s"
        )
    raise KillingFailed(
        f"No layer killed residual orders {list(orders)} within "
        f"{config.max_retries} retries"
    )


def _kill(
    targets: Sequence[Tuple[RationalFunction, int]],
    places: Sequence[Place],
    config: DescentConfig | None,
    tower: ASTower | None = None,
) -> ExtensionCertificate:
    config = config or DescentConfig()
    if not targets:
        raise ValueError("Nothing to kill")
    field = places[0].field
    p = field.p
    for _, exponent in targets:
        if exponent < 1 or p**exponent > config.max_tower_degree:
            raise ValueError(
                f"Exponent {exponent} must be positive with p^N <= "
                f"{config.max_tower_degree}"
            )
    if tower is None:
        tower = ASTower.over(field, places)
    progress = [
        _Progress(a, exponent, tower.element(a), tower.element(0), 0)
        for a, exponent in targets
    ]

    while not all(item.done for item in progress):
        active = [i for i, item in enumerate(progress) if not item.done]
        reductions = [reduce_in_tower(progress[i].z, tower) for i in active]
        if not all(reduction.is_clean for reduction in reductions):
            orders = [
                max(reduction.orders[j] for reduction in reductions)
                for j in range(len(places))
            ]
            tower, reductions = _extend_until_clean(
                tower, [progress[i].z for i in active], orders, config
            )
        for i, reduction in zip(active, reductions):
            item = progress[i]
            # z = root^p + remainder, so z^(p^d) = root^(p^(d+1)) + remainder^(p^d)
            progress[i] = item._replace(
                z=reduction.root,
                g=item.g + reduction.remainder.frobenius(item.depth),
                depth=item.depth + 1,
            )

    entries = tuple(
        CertificateEntry(
            item.a, item.exponent, tower.element(item.z), tower.element(item.g)
        )
        for item in progress
    )
    logger.info(
        f"Certified {len(entries)} classes at {[str(place) for place in places]} "
        f"with a tower of degree {tower.degree}"
    )
    return ExtensionCertificate(tower, entries)


def kill_class(
    a: RationalFunction, place: Place, config: DescentConfig | None = None
) -> ExtensionCertificate:
    """
    Kill the class of ``a`` in K / (O_P + K^p) with one Artin-Schreier layer.

    The layer is x^p - x = u^-s with s = choose_s(m), m the pole order of the
    normal form, and h = w + sum c_n^(1/p) pi^n over the normal-form terms.
    An already extendable ``a`` gets the empty tower.
    """
    place.require_rational()
    return _kill([(a, 1)], [place], config)


def kill_class_multi(
    a: RationalFunction,
    places: Sequence[Place],
    config: DescentConfig | None = None,
    layer: RationalFunction | None = None,
) -> ExtensionCertificate:
    """
    Kill the class of ``a`` at several rational places with one shared layer.

    The first layer function f is matched at every place to a global
    uniformizer power (see ``matched_global_uniformizer``) before the
    certificate is returned.

    Parameters
    ----------
    a : RationalFunction
    places : Sequence[Place]
        Distinct rational places.
    config : DescentConfig or None
    layer : RationalFunction or None
        First layer function to use instead of ``layer_function``; it must
        have a pole of order prime to p at every place. Further layers are
        added if it leaves a residual.

    Raises
    ------
    NoResidueRoot
        If the layer function cannot be matched to a power of a local
        uniformizer at some place; extend the constants and retry.
    """
    if len(places) == 1 and layer is None:
        return kill_class(a, places[0], config)
    for place in places:
        place.require_rational()
    orders = [normal_form(a, place).qclass.pole_order for place in places]
    tower = None
    if layer is not None:
        tower = ASTower.over(places[0].field, places).extend(layer)
        s = [tracked.layers[0].s for tracked in tower.tracked]
        matched_global_uniformizer(layer, places, s, orders)
    certificate = _kill([(a, 1)], places, config, tower)
    tower = certificate.tower
    if layer is None and tower.length:
        f = tower.defining_elements()[0].value
        s = [tracked.layers[0].s for tracked in tower.tracked]
        w = matched_global_uniformizer(f, places, s, orders)
        logger.debug(f"Matched layer 1 to powers of {w}")
    return certificate


def kill_higher(
    a: RationalFunction,
    exponent: int,
    places: Sequence[Place],
    config: DescentConfig | None = None,
) -> ExtensionCertificate:
    """
    Kill the class of ``a`` in K / (O + K^(p^N)) with a tower of at most N
    layers: kill modulo p^th powers, then recurse on the root with N - 1.
    """
    return _kill([(a, exponent)], places, config)


def kill_presentation(
    data: TorsorData, config: DescentConfig | None = None
) -> ExtensionCertificate:
    """One tower killing every cocycle of a torsor at all of its places."""
    return _kill(list(data.entries()), data.places, config)
