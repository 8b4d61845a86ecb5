"""
Mod p homology growth along a chain of finite abelian covers of the
Salvetti complex.

For a chain of normal subgroups with trivial intersection, b_i(cover; F_p)
divided by the index tends to the reduced Betti number of L one degree
down. Abelian kernels only intersect down to the commutator subgroup
when A_L is not abelian, so the ratios here are descriptive unless L
belongs to a family whose cover homology is known exactly.
"""

import csv
from fractions import Fraction
import sqlite3

import networkx as nx
from sqlogging import logging as sqlogging

from raag.complexes.constructions import require_flag
from raag.config import log_directory
from raag.errors import CorruptComplexError, PreconditionError
from raag.homology.homology import reduced_homology
from raag.homology.primes import require_prime
from raag.homology.rank_mod_p import rank_mod_p
from raag.homology.smith import smith_normal_form
from raag.logging_setup import get_logger
from raag.models.cube_complex import finite_cover
from raag.workers import parallel_map

CAVEAT = (
    "Abelian covers do not form a residual chain unless A_L is abelian. "
    "Ratios are reported as data. Convergence to the reference is only "
    "claimed where the cover homology is known exactly."
)
CSV_COLUMNS = [
    "modulus_vector",
    "index",
    "degree",
    "betti",
    "ratio_num",
    "ratio_den",
    "reference",
]


class GrowthRow:
    """
    One cover in the chain.

    betti      b_i(cover) for i = 0 .. dim L + 1
    ratios     betti / index as Fractions
    exact      predicted Betti numbers for the derivable families, else None
    cover      cell counts of the cover, as from CubeComplex.summary
    """

    def __init__(self, modulus_vector, index, betti, exact=None, cover=None):
        self.modulus_vector = modulus_vector
        self.cover = cover
        self.index = index
        self.betti = tuple(betti)
        self.ratios = tuple(Fraction(b, index) for b in self.betti)
        self.exact = None if exact is None else tuple(exact)

    def __repr__(self):
        return (
            f"GrowthRow({self.modulus_vector}, index={self.index}, "
            f"betti={self.betti})"
        )

    @property
    def status(self):
        if self.exact is None:
            return None
        return "EXACT" if self.exact == self.betti else "MISMATCH"


class GrowthSeries:
    """
    prime        p, or 0 for rational coefficients
    reference    reference[i] is the reduced Betti number of L in degree
                 i - 1, the predicted limit of the degree i ratios
    """

    def __init__(self, base_name, prime, reference, rows=()):
        self.base_name = base_name
        self.prime = prime
        self.reference = tuple(reference)
        self.rows = list(rows)

    def __repr__(self):
        return (
            f"<GrowthSeries {self.field_name} over {self.base_name}, "
            f"{len(self.rows)} covers>"
        )

    @property
    def field_name(self):
        return "Q" if self.prime == 0 else f"F_{self.prime}"

    def is_exact(self):
        return bool(self.rows) and all(row.status == "EXACT" for row in self.rows)

    def records(self):
        for row in self.rows:
            for degree, (betti, ratio) in enumerate(zip(row.betti, row.ratios)):
                yield {
                    "modulus_vector": row.modulus_vector,
                    "index": row.index,
                    "degree": degree,
                    "betti": betti,
                    "ratio_num": ratio.numerator,
                    "ratio_den": ratio.denominator,
                    "reference": self.reference[degree],
                }

    def to_csv(self, stream):
        writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for record in self.records():
            writer.writerow(record)

    def cover_summaries(self):
        return [row.cover for row in self.rows]

    def render(self):
        lines = [
            f"Growth of {self.field_name} homology over covers of the "
            f"Salvetti complex of {self.base_name}",
            "  reference  "
            + "  ".join(f"deg {i}: {r}" for i, r in enumerate(self.reference)),
        ]
        for row in self.rows:
            ratios = ", ".join(str(r) for r in row.ratios)
            line = (
                f"  {row.modulus_vector:<12} index {row.index:<6} "
                f"betti {list(row.betti)}  ratios ({ratios})"
            )
            if row.status is not None:
                line += f"  {row.status}"
            lines.append(line)
        if self.is_exact():
            lines.append("  EXACT: every cover matches the closed form.")
        elif any(row.status == "MISMATCH" for row in self.rows):
            lines.append("  MISMATCH: a cover disagrees with the closed form.")
        else:
            lines.append("  No closed form is known for this complex and chain.")
        lines.append("  " + CAVEAT)
        return "\n".join(lines)

    def log_to_db(self, db_name):
        """
        Append every row to a sqlite run database in log_directory.
        """
        try:
            logger = sqlogging.open_logger(
                name=db_name,
                dir_name=log_directory,
                level="info",
            )
        except (sqlite3.OperationalError, RuntimeError):
            logger = sqlogging.create_logger(
                name=db_name,
                dir_name=log_directory,
                columns=["prime"] + CSV_COLUMNS,
            )
        for record in self.records():
            logger.info({"prime": self.prime, **record})
        logger.close()


def _join_factors(complex_):
    # A flag complex is the join of the full subcomplexes spanned by the
    # components of the complement of its 1-skeleton.
    complement = nx.complement(complex_.graph())
    return [sorted(c) for c in nx.connected_components(complement)]


def _factor_betti(n_vertices, order):
    """
    Betti numbers of the connected cover of degree `order` of a wedge of
    n_vertices circles. Any field gives the same answer.
    """
    return (1, order * (n_vertices - 1) + 1)


def _multiply(a, b):
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return tuple(product)


def exact_prediction(complex_, spec):
    """
    Betti numbers of finite_cover(complex_, spec) when A_L is a product of
    free groups and copies of Z and the deck group splits along the
    factors. Returns None outside that family.
    """
    edges = set(complex_.faces(1))
    order = len(spec.deck_group())
    betti = (1,)
    orders = 1
    for factor in _join_factors(complex_):
        if len(factor) > 1 and any(
            (u, v) in edges for u in factor for v in factor if u < v
        ):
            return None
        factor_order = len(spec.subgroup(factor))
        orders *= factor_order
        betti = _multiply(betti, _factor_betti(len(factor), factor_order))
    if orders != order:
        return None
    return betti + (0,) * (complex_.dimension + 2 - len(betti))


def reference_betti(complex_, p):
    """
    Reduced Betti numbers of L in degrees -1 .. dim L, which are the
    limits for degrees 0 .. dim L + 1 of the cover.
    """
    summary = reduced_homology(complex_, () if p == 0 else (p,))
    degrees = range(-1, complex_.dimension + 1)
    if p == 0:
        return tuple(summary.betti_q(d) for d in degrees)
    return tuple(summary.betti_fp(d, p) for d in degrees)


def _rank(matrix, p):
    if p == 0:
        return smith_normal_form(matrix).rank
    return rank_mod_p(matrix, p)


def _cover_betti(task):
    # Runs in a worker process, so everything below stays serial.
    complex_, spec, p = task
    cover = finite_cover(complex_, spec, check_flag=False)
    ranks = {i: _rank(m, p) for i, m in cover.boundaries.items()}
    betti = tuple(
        cover.n_cells(i) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in range(cover.dimension + 1)
    )
    alternating = sum((-1) ** i * b for i, b in enumerate(betti))
    if alternating != cover.euler_characteristic():
        raise CorruptComplexError(
            f"Betti numbers {betti} of the {spec.describe()} cover do not "
            f"sum to its Euler characteristic {cover.euler_characteristic()}."
        )
    return spec.describe(), cover.order, betti, cover.summary()


def growth_experiment(complex_, p, chain, n_workers=None, log_db=None):
    """
    p = 0 computes rational Betti numbers. The chain must be ordered by
    nondecreasing index.
    """
    if p != 0:
        require_prime(p)
    chain = list(chain)
    require_flag(complex_)
    for spec in chain:
        spec.validate_for(complex_)

    orders = [len(spec.deck_group()) for spec in chain]
    if any(a > b for a, b in zip(orders, orders[1:])):
        raise PreconditionError(
            f"Quotients must come in order of increasing index, got {orders}."
        )

    reference = reference_betti(complex_, p)
    logger = get_logger("growth")
    logger.info(
        f"Growth over {complex_.name}, p={p}, {len(chain)} covers, "
        f"indices {orders}, reference {reference}"
    )
    results = parallel_map(
        _cover_betti, [(complex_, spec, p) for spec in chain], n_workers=n_workers
    )

    series = GrowthSeries(complex_.name, p, reference)
    for spec, (label, index, betti, cover) in zip(chain, results):
        exact = exact_prediction(complex_, spec)
        row = GrowthRow(label, index, betti, exact=exact, cover=cover)
        if row.status == "MISMATCH":
            logger.warning(
                f"Cover {label} of {complex_.name} has Betti numbers {betti}, "
                f"the closed form gives {row.exact}."
            )
        series.rows.append(row)

    if log_db is not None:
        series.log_to_db(log_db)
    return series
