"""Value types shared across the dice computations."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Tuple

from utils.exceptions import DomainError, InvalidProbabilityError, PreconditionError

# Exact arithmetic is carried by the standard rational type; it is always
# reduced, has a positive denominator and represents zero as 0/1.
ExactRational = Fraction

DICE_PER_THROW = 6


class Probability(Fraction):
    """A rational number constrained to the closed interval [0, 1].

    Accepts anything ``Fraction`` accepts: ``Probability(1, 6)``,
    ``Probability("1/6")``, ``Probability("0.25")``, ``Probability(1)``.
    Arithmetic on a Probability yields a plain ``Fraction``.
    """

    __slots__ = ()

    def __new__(cls, numerator: Any = 0, denominator: Any = None):
        if isinstance(numerator, str):
            numerator = numerator.strip()
        try:
            self = super().__new__(cls, numerator, denominator)
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise InvalidProbabilityError(
                f"Not a rational probability: {numerator!r}"
                + (f"/{denominator!r}" if denominator is not None else "")
            ) from e
        if self < 0 or self > 1:
            raise InvalidProbabilityError(f"Probability {self} is outside [0, 1]")
        return self


@dataclass(frozen=True)
class Wager:
    """One proposition: at least ``threshold`` successes among ``num_dice`` dice."""

    num_dice: int
    threshold: int
    success_prob: Probability

    def __post_init__(self):
        if self.num_dice < 1:
            raise DomainError(f"num_dice must be at least 1, got {self.num_dice}")
        if self.threshold < 0:
            raise DomainError(f"threshold must be non-negative, got {self.threshold}")
        if not isinstance(self.success_prob, Probability):
            object.__setattr__(self, "success_prob", Probability(self.success_prob))


@dataclass(frozen=True)
class DiceSpace:
    """The complete outcome space of ``num_dice`` fair dice with ``faces`` faces each.

    A die counts as a success when it shows one of ``success_faces`` faces.
    """

    num_dice: int
    faces: int = 6
    success_faces: int = 1

    def __post_init__(self):
        if self.num_dice < 1:
            raise DomainError(f"num_dice must be at least 1, got {self.num_dice}")
        if self.faces < 2:
            raise DomainError(f"faces must be at least 2, got {self.faces}")
        if not 1 <= self.success_faces <= self.faces:
            raise DomainError(
                f"success_faces must lie in 1..{self.faces}, got {self.success_faces}"
            )

    @property
    def success_probability(self) -> Probability:
        return Probability(self.success_faces, self.faces)

    @property
    def outcome_count(self) -> int:
        return self.faces**self.num_dice


class WagerMode(str, Enum):
    """How a wager reads its threshold."""

    AT_LEAST = "at_least"
    EXACTLY = "exactly"


@dataclass(frozen=True)
class PepysFamily:
    """The generalized propositions: k successes among ``dice_per_unit * k`` dice, k = 1..k_max."""

    dice_per_unit: int = 6
    k_max: int = 3
    success_prob: Probability = field(default_factory=lambda: Probability(1, 6))
    mode: WagerMode = WagerMode.AT_LEAST

    def __post_init__(self):
        if self.dice_per_unit < 1:
            raise DomainError(f"dice_per_unit must be at least 1, got {self.dice_per_unit}")
        if self.k_max < 1:
            raise DomainError(f"k_max must be at least 1, got {self.k_max}")
        if not isinstance(self.success_prob, Probability):
            object.__setattr__(self, "success_prob", Probability(self.success_prob))
        object.__setattr__(self, "mode", WagerMode(self.mode))

    def wagers(self) -> Tuple[Wager, ...]:
        return tuple(
            Wager(self.dice_per_unit * k, k, self.success_prob)
            for k in range(1, self.k_max + 1)
        )


@dataclass(frozen=True)
class ThrowSequence:
    """Consecutive throws of six dice, recorded as the success count of each throw."""

    throws: Tuple[int, ...]

    def __post_init__(self):
        throws = tuple(int(t) for t in self.throws)
        for t in throws:
            if not 0 <= t <= DICE_PER_THROW:
                raise DomainError(
                    f"Each throw holds 0..{DICE_PER_THROW} successes, got {t}"
                )
        object.__setattr__(self, "throws", throws)

    def __len__(self) -> int:
        return len(self.throws)

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Consecutive disjoint pairs of throws, as James scores them."""
        if len(self.throws) % 2:
            raise PreconditionError(
                f"James scores pairs of throws; got an odd count of {len(self.throws)}"
            )
        return tuple(zip(self.throws[0::2], self.throws[1::2]))

    def to_dict(self) -> Dict[str, Any]:
        return {"throws": list(self.throws)}


@dataclass(frozen=True)
class SimConfig:
    """Reproducibility key of a Monte Carlo run."""

    trials: int
    seed: int
    generator_id: str = "pcg64"

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError(f"trials must be at least 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
