"""
Data models for the transversal toolkit.

Every type here is an immutable value: set families, assignments, bipartite
graphs and matchings, the reports produced by the condition checkers, and the
error hierarchy shared by all modules.

Indices are 0-based throughout. Where the literature writes S_1, ..., S_n we
write sets[0], ..., sets[n - 1].
"""

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union


Real = Union[int, float, Fraction]
Pair = Tuple[int, int]


# ============================================================================
# Errors
# ============================================================================

@dataclass
class TransversalError(Exception):
    """
    Base exception for every failure raised by the toolkit.

    Attributes:
        code: Machine-readable error code (INPUT_ERROR, DOMAIN_ERROR, ...)
        message: Human-readable description
        details: Optional structured context (offending index, line, ...)

    Example:
        >>> raise DomainError("set 3 is empty", details={"index": 3})
    """

    code: str
    message: str
    details: Optional[Dict[str, Any]] = None

    def __str__(self) -> str:
        error_str = f"[{self.code}] {self.message}"
        if self.details:
            error_str += f" | Details: {self.details}"
        return error_str


class InputError(TransversalError):
    """Malformed arguments (wrong lengths, negative labels, bad indices)."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code="INPUT_ERROR", message=message, details=details)


class DomainError(TransversalError):
    """Arguments outside the mathematical domain of an operation."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code="DOMAIN_ERROR", message=message, details=details)


class PreconditionError(TransversalError):
    """An operation was handed an object that fails its documented precondition."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code="PRECONDITION_ERROR", message=message, details=details)


class CapacityError(TransversalError):
    """Exponential enumeration refused because the instance is too large."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code="CAPACITY_ERROR", message=message, details=details)


class GenerationError(TransversalError):
    """Instance generation is infeasible or ran out of retries."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code="GENERATION_ERROR", message=message, details=details)


class ConfigError(TransversalError):
    """An environment variable holds an unusable value."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(code="CONFIG_ERROR", message=message, details=details)


class ParseError(TransversalError):
    """Instance file could not be parsed; `line` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(
            code="PARSE_ERROR",
            message=f"line {line}: {message}",
            details={"line": line},
        )

    @property
    def line(self) -> int:
        return self.details["line"]


def _check_label(value: Any, what: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    if value < 0:
        raise InputError(f"{what} must be non-negative, got {value}")
    return value


# ============================================================================
# Set families
# ============================================================================

@dataclass(frozen=True)
class SetFamily:
    """
    Indexed finite family of finite sets of non-negative integer labels.

    Each set is stored as a sorted, duplicate-free tuple. Equal sets may
    appear at different indices: the family is indexed, not a set of sets.

    Example:
        >>> family = SetFamily.of([{0, 1}, [2]])
        >>> family.sets
        ((0, 1), (2,))
    """

    sets: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        normalized = []
        for index, members in enumerate(self.sets):
            labels = [_check_label(x, f"element of set {index}") for x in members]
            unique = sorted(set(labels))
            if len(unique) != len(labels):
                raise InputError(
                    f"set {index} lists an element twice",
                    details={"index": index},
                )
            normalized.append(tuple(unique))
        object.__setattr__(self, "sets", tuple(normalized))

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "SetFamily":
        """Build a family from any iterables of labels."""
        return cls(tuple(tuple(members) for members in sets))

    @property
    def n(self) -> int:
        return len(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, index: int) -> Tuple[int, ...]:
        return self.sets[index]

    @cached_property
    def member_sets(self) -> Tuple[frozenset, ...]:
        """Frozen-set view of every set, for membership and intersection."""
        return tuple(frozenset(members) for members in self.sets)

    @cached_property
    def universe(self) -> Tuple[int, ...]:
        """Distinct elements of the union, ascending."""
        return tuple(sorted(set().union(*self.member_sets)))


@dataclass(frozen=True)
class FamilyStats:
    """
    Tightest parameters of a family.

    Attributes:
        n: Number of sets
        l: Minimum set size, None for the empty family ("no sets")
        m: Maximum intersection size over distinct index pairs (0 when n < 2)
        has_empty_set: Whether some set is empty
        first_empty_index: Index of the first empty set, if any
    """

    n: int
    l: Optional[int]
    m: int
    has_empty_set: bool
    first_empty_index: Optional[int] = None


# ============================================================================
# Assignments and transversals
# ============================================================================

@dataclass(frozen=True)
class Assignment:
    """One chosen element per index; choices[i] is meant to lie in S_i."""

    choices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(self.choices))
        for index, value in enumerate(self.choices):
            _check_label(value, f"choice {index}")

    def __len__(self) -> int:
        return len(self.choices)


@dataclass(frozen=True)
class Transversal(Assignment):
    """
    An assignment that has been validated: every choice lies in its set and
    all choices are distinct. Build one with `families.make_transversal`.
    """

    def representative(self, index: int) -> int:
        return self.choices[index]

    @cached_property
    def owner(self) -> Mapping[int, int]:
        """Inverse map, element -> index of the set it represents."""
        return {element: index for index, element in enumerate(self.choices)}


@dataclass(frozen=True)
class TransversalCheck:
    """
    Verdict of `validate_transversal`.

    On rejection exactly one of `missing_index` (choice not in its set) or
    `collision` (two indices with the same choice) is set.
    """

    valid: bool
    missing_index: Optional[int] = None
    collision: Optional[Pair] = None

    @property
    def reason(self) -> str:
        if self.valid:
            return "valid"
        if self.missing_index is not None:
            return f"choice {self.missing_index} is not in its set"
        return f"indices {self.collision[0]} and {self.collision[1]} share a choice"


# ============================================================================
# Bipartite graphs and matchings
# ============================================================================

@dataclass(frozen=True)
class BipartiteGraph:
    """
    Bipartite graph with sides A = {0..size_a-1} and B = {0..size_b-1}.

    Edges are (a, b) pairs. Use `from_edges` to build from a list, which
    rejects duplicates instead of silently merging them.
    """

    size_a: int
    size_b: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        _check_label(self.size_a, "size of A")
        _check_label(self.size_b, "size of B")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for a, b in self.edges:
            if not (0 <= a < self.size_a and 0 <= b < self.size_b):
                raise InputError(
                    f"edge ({a}, {b}) has an endpoint out of range",
                    details={"edge": (a, b)},
                )

    @classmethod
    def from_edges(cls, size_a: int, size_b: int, edges: Iterable[Pair]) -> "BipartiteGraph":
        edge_list = [(int(a), int(b)) for a, b in edges]
        edge_set = frozenset(edge_list)
        if len(edge_set) != len(edge_list):
            raise InputError("duplicate edge in edge list")
        return cls(size_a, size_b, edge_set)

    @cached_property
    def sorted_edges(self) -> Tuple[Pair, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency_a(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted B-neighbours of every A-vertex."""
        neighbours = [[] for _ in range(self.size_a)]
        for a, b in self.sorted_edges:
            neighbours[a].append(b)
        return tuple(tuple(row) for row in neighbours)

    def degree(self, vertex: int) -> int:
        """Degree of an A-vertex."""
        return len(self.adjacency_a[vertex])


@dataclass(frozen=True)
class Matching:
    """A set of (a, b) edges, no vertex used twice."""

    pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))

    @cached_property
    def sorted_pairs(self) -> Tuple[Pair, ...]:
        return tuple(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class MatchingCheck:
    """Verdict of `validate_matching`; `offending_pair` names the first bad pair."""

    valid: bool
    reason: str = "valid"
    offending_pair: Optional[Pair] = None
    saturates_a: bool = False


# ============================================================================
# Condition checking
# ============================================================================

@dataclass(frozen=True)
class ConditionReport:
    """
    Result of comparing the two sides of a sufficient condition.

    `holds` is lhs <= rhs up to the shared relative tie tolerance.
    `inputs` echoes the parameters the sides were computed from.
    """

    holds: bool
    lhs: float
    rhs: float
    inputs: Mapping[str, Any] = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class DependencyDigraph:
    """
    Structural dependency digraph of the collision events over n indices.

    Event k is the index pair `events[k]` (i < j, lexicographic order);
    `neighbours[k]` lists the events sharing at least one index with it.
    Adjacency is symmetric.
    """

    n: int
    events: Tuple[Pair, ...]
    neighbours: Tuple[Tuple[int, ...], ...]

    def event_id(self, i: int, j: int) -> int:
        return self._ids[(min(i, j), max(i, j))]

    @cached_property
    def _ids(self) -> Dict[Pair, int]:
        return {event: k for k, event in enumerate(self.events)}

    @property
    def max_degree(self) -> int:
        return max((len(row) for row in self.neighbours), default=0)


@dataclass(frozen=True)
class LllCertificate:
    """
    Per-event probabilities and weights for the general local lemma.

    Attributes:
        probabilities: P(E_k) for every event, in [0, 1]
        weights: x_k for every event, in [0, 1)
        digraph: The dependency digraph the weights are checked against
    """

    probabilities: Tuple[Real, ...]
    weights: Tuple[float, ...]
    digraph: DependencyDigraph

    def __post_init__(self):
        object.__setattr__(self, "probabilities", tuple(self.probabilities))
        object.__setattr__(self, "weights", tuple(self.weights))
        count = len(self.digraph.events)
        if len(self.probabilities) != count or len(self.weights) != count:
            raise InputError(
                "certificate needs one probability and one weight per event",
                details={"events": count},
            )
        for k, p in enumerate(self.probabilities):
            if not 0 <= p <= 1:
                raise DomainError(f"probability of event {k} outside [0, 1]: {p}")
        for k, x in enumerate(self.weights):
            if not 0 <= x < 1:
                raise DomainError(f"weight of event {k} outside [0, 1): {x}")


@dataclass(frozen=True)
class LllCheck:
    """
    Verdict of the general local lemma check.

    Attributes:
        holds: Every event satisfies P(E_k) <= x_k * prod(1 - x_j)
        min_slack: Smallest value of the right side minus P(E_k)
        worst_event: Event attaining `min_slack` (None with no events)
        avoid_all_lower_bound: prod(1 - x_k), the lemma's guaranteed lower
            bound on the probability that no event occurs
    """

    holds: bool
    min_slack: float
    worst_event: Optional[int]
    avoid_all_lower_bound: float


# ============================================================================
# Solver, oracle and graph results
# ============================================================================

@dataclass(frozen=True)
class SolveOutcome:
    """
    Result of a resampling run.

    `transversal` is None when the run was exhausted; then
    resample_count == rounds_cap.
    """

    transversal: Optional[Transversal]
    resample_count: int
    rounds_cap: int
    seed: int

    @property
    def found(self) -> bool:
        return self.transversal is not None

    @property
    def exhausted(self) -> bool:
        return self.transversal is None


@dataclass(frozen=True)
class ExactResult:
    """Verdict of the matching-based oracle, with a witness when one exists."""

    exists: bool
    transversal: Optional[Transversal] = None


@dataclass(frozen=True)
class C4Witness:
    """4-cycle u - u' - v - v' - u with u, v in A and u', v' in B."""

    u: int
    v: int
    u_prime: int
    v_prime: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.u, self.v, self.u_prime, self.v_prime)


@dataclass(frozen=True)
class C4Check:
    free: bool
    witness: Optional[C4Witness] = None


@dataclass(frozen=True)
class Theorem3Report:
    """
    Result of the degree-threshold check on a bipartite graph.

    `degree` compares 2e|A| (lhs) against the squared minimum A-degree (rhs).
    A holding report certifies a saturating matching; a failing one proves
    nothing.
    """

    c4: C4Check
    degree: ConditionReport
    deficient_vertices: Tuple[int, ...] = ()

    @property
    def holds(self) -> bool:
        return self.c4.free and not self.deficient_vertices


@dataclass(frozen=True)
class PlaneOrder:
    """Prime order q of a projective plane over the integers mod q."""

    q: int

    def __post_init__(self):
        if isinstance(self.q, bool) or not isinstance(self.q, int) or not _is_prime(self.q):
            raise DomainError(
                f"plane order must be a prime, got {self.q!r}",
                details={"q": self.q},
            )

    @property
    def size(self) -> int:
        """Number of points (and of lines): q^2 + q + 1."""
        return self.q * self.q + self.q + 1


def _is_prime(value: int) -> bool:
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True
