from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mim.decomposition.models import PrimeForm
from mim.errors import BudgetTooSmall


class OpWeights(BaseModel):
    """Relative odds of each internal node kind when a choice is open."""
    model_config = ConfigDict(frozen=True)

    p: float = Field(default=1.0, ge=0)
    s: float = Field(default=1.0, ge=0)
    ks: float = Field(default=1.0, ge=0)
    n: float = Field(default=1.0, ge=0)

    @model_validator(mode="after")
    def _not_all_zero(self):
        if self.p + self.s + self.ks + self.n <= 0:
            raise ValueError("at least one operation weight must be positive")
        return self


class GenConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=0, ge=0, lt=2**64)
    target_n: int
    op_weights: OpWeights = OpWeights()
    class_size_range: Tuple[int, int] = (1, 3)
    max_depth: int = Field(default=6, ge=1)
    max_children: int = Field(default=4, ge=2)
    leaf_probability: float = Field(default=0.5, ge=0, le=1)
    k_max: int = Field(default=12, ge=7)
    forms: Tuple[PrimeForm, ...] = tuple(PrimeForm)
    # largest subtree that may hold an S node, a K+S node with several non-leaf
    # children or a run of K+S leaves; None leaves density unbounded
    dense_max: Optional[int] = Field(default=None, ge=6)

    @model_validator(mode="before")
    @classmethod
    def _budget(cls, data):
        # BudgetTooSmall is not a ValueError, so pydantic lets it through
        if isinstance(data, dict) and isinstance(data.get("target_n"), int) and data["target_n"] < 1:
            raise BudgetTooSmall(data["target_n"])
        return data

    @model_validator(mode="after")
    def _ranges(self):
        low, high = self.class_size_range
        if low < 1 or high < low:
            raise ValueError(f"class_size_range must satisfy 1 <= low <= high, got {self.class_size_range}")
        if not self.forms:
            raise ValueError("forms must name at least one prime shape")
        return self

    @classmethod
    def sparse(cls, seed: int, target_n: int) -> "GenConfig":
        """P, K+S and path/cycle pieces with singleton classes; O(n) edges."""
        return cls(
            seed=seed,
            target_n=target_n,
            op_weights=OpWeights(p=2, s=0, ks=1, n=2),
            class_size_range=(1, 1),
            max_depth=10,
            max_children=4,
            forms=(PrimeForm.EP, PrimeForm.EC),
            dense_max=8,
        )

    @classmethod
    def small(cls, seed: int, target_n: int) -> "GenConfig":
        """Differential-test instances: every node kind, classes of size 1 or 2."""
        return cls(seed=seed, target_n=target_n, class_size_range=(1, 2), max_depth=4)
