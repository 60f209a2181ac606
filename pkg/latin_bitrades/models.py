"""
Models Module

This module defines the pydantic data models for diagnostics, predictions,
reports and run configuration.
"""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, PositiveInt, field_validator


def yes_no(flag: Optional[bool]) -> str:
    """Render a flag the way reports print it."""
    if flag is None:
        return "none"
    return "yes" if flag else "no"


class BitradeDiagnostics(BaseModel):
    """Per-condition result of the definitional bitrade check."""
    nonempty: bool = Field(..., description="T has at least one entry")
    same_size: bool = Field(..., description="Condition (1): |T| = |T'|")
    disjoint: bool = Field(..., description="Condition (2): Ent(T) and Ent(T') are disjoint")
    same_shape: bool = Field(..., description="T and T' fill the same cells")
    row_failure: Optional[int] = Field(None, description="First row whose symbol sets differ")
    col_failure: Optional[int] = Field(None, description="First column whose symbol sets differ")
    shared_entry: Optional[Tuple[int, int, int]] = Field(None, description="An entry of both T and T'")
    shape_cell: Optional[Tuple[int, int]] = Field(None, description="A cell filled in only one component")

    @property
    def valid(self) -> bool:
        return (
            self.nonempty and self.same_size and self.disjoint and self.same_shape
            and self.row_failure is None and self.col_failure is None
        )

    def failures(self) -> List[str]:
        """Return one message per failed condition."""
        messages = []
        if not self.nonempty:
            messages.append("nonempty failed: T has no entries")
        if not self.same_size:
            messages.append("(1) failed: |T| != |T'|")
        if not self.disjoint:
            messages.append(f"(2) failed at entry {self.shared_entry}")
        if not self.same_shape:
            messages.append(f"shape failed at cell {self.shape_cell}")
        if self.row_failure is not None:
            messages.append(f"(3*) failed at row {self.row_failure}")
        if self.col_failure is not None:
            messages.append(f"(3*) failed at column {self.col_failure}")
        return messages


class TauCheck(BaseModel):
    """Result of checking the three conditions on a construction triple."""
    c1: bool = Field(..., description="theta fixes the row of e but not its column")
    c2: bool = Field(..., description="theta_bar fixes the column of e")
    c3: bool = Field(..., description="theta_bar^-1 theta fixes the symbol of e")

    @property
    def valid(self) -> bool:
        return self.c1 and self.c2 and self.c3

    def failed_conditions(self) -> List[str]:
        return [name for name, ok in (("C1", self.c1), ("C2", self.c2), ("C3", self.c3)) if not ok]


class CountPrediction(BaseModel):
    """Trade counts predicted from stabilizer orders."""
    trade_size: int
    per_row: int
    per_col: int
    per_sym: int
    rows: int = Field(..., description="Number of non-empty rows")
    cols: int = Field(..., description="Number of non-empty columns")
    symbols: int = Field(..., description="Number of distinct symbols")
    k: Optional[int] = Field(None, description="Homogeneity, when per_row = per_col = per_sym")


class BlockVerdict(BaseModel):
    """Outcome of the block test under an overgroup."""
    algebraic: Optional[bool] = Field(None, description="S_B G == G S_B")
    direct: Optional[bool] = Field(None, description="Every element maps the orbit onto or off itself")
    witness: Optional[str] = Field(None, description="Element splitting the orbit, when not a block")
    witness_entry: Optional[Tuple[int, int, int]] = Field(None, description="Orbit entry moved outside by the witness")
    witness_image: Optional[Tuple[int, int, int]] = Field(None, description="Image of witness_entry, outside the orbit")

    @property
    def is_block(self) -> bool:
        verdicts = [v for v in (self.algebraic, self.direct) if v is not None]
        return all(verdicts)


class CdhCheck(BaseModel):
    """Per-condition result for a coset construction triple."""
    g1: bool = Field(..., description="abc = 1")
    g2_ab: bool = Field(..., description="<a> and <b> meet trivially")
    g2_ac: bool = Field(..., description="<a> and <c> meet trivially")
    g2_bc: bool = Field(..., description="<b> and <c> meet trivially")

    @property
    def valid(self) -> bool:
        return self.g1 and self.g2_ab and self.g2_ac and self.g2_bc

    def failed_conditions(self) -> List[str]:
        named = (("G1", self.g1), ("G2(a,b)", self.g2_ab), ("G2(a,c)", self.g2_ac), ("G2(b,c)", self.g2_bc))
        return [name for name, ok in named if not ok]


class TradeReport(BaseModel):
    """Summary of a constructed bitrade."""
    size: int
    k: Optional[int] = None
    orthogonal_predicted: Optional[bool] = None
    orthogonal_direct: bool
    group_order: Optional[int] = None
    stab_full: Optional[int] = None
    stab_row: Optional[int] = None
    stab_col: Optional[int] = None
    stab_sym: Optional[int] = None
    entry_transitive: Optional[bool] = None
    minimal: Optional[str] = Field(None, description="yes, no or inconclusive")
    extras: Dict[str, str] = Field(default_factory=dict)

    def summary_line(self) -> str:
        k = "none" if self.k is None else str(self.k)
        return f"size={self.size} k={k} orthogonal={yes_no(self.orthogonal_direct)}"

    def to_lines(self) -> List[str]:
        """Render the report as key=value lines, summary first."""
        lines = [self.summary_line()]
        if self.orthogonal_predicted is not None:
            lines.append(f"orthogonal_predicted={yes_no(self.orthogonal_predicted)}")
        lines.append(f"orthogonal_direct={yes_no(self.orthogonal_direct)}")
        if self.group_order is not None:
            lines.append(f"group_order={self.group_order}")
            lines.append(
                f"stabilizers=full:{self.stab_full} row:{self.stab_row} "
                f"col:{self.stab_col} sym:{self.stab_sym}"
            )
        if self.entry_transitive is not None:
            lines.append(f"entry_transitive={yes_no(self.entry_transitive)}")
        if self.minimal is not None:
            lines.append(f"minimal={self.minimal}")
        for key in sorted(self.extras):
            lines.append(f"{key}={self.extras[key]}")
        return lines


class VerifyReport(BaseModel):
    """Result of verifying a bitrade read from disk."""
    diagnostics: BitradeDiagnostics
    embedded: Optional[bool] = None
    k: Optional[int] = None
    orthogonal: Optional[bool] = None
    minimal: Optional[str] = None
    primary: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.diagnostics.valid and self.embedded is not False

    def to_lines(self) -> List[str]:
        lines = []
        lines.append(f"bitrade={'ok' if self.diagnostics.valid else 'failed'}")
        lines.extend(self.diagnostics.failures())
        if self.embedded is not None:
            lines.append("embedding=ok" if self.embedded else "embedding failed")
        if self.diagnostics.valid:
            lines.append(f"k={'none' if self.k is None else self.k}")
            lines.append(f"orthogonal={yes_no(self.orthogonal)}")
            lines.append(f"minimal={self.minimal}")
            lines.append(f"primary={self.primary}")
        return lines


class RunConfig(BaseModel):
    """Resolved configuration for one CLI invocation."""
    subcommand: str = Field(..., description="Name of the CLI subcommand")
    inputs: Dict[str, str] = Field(default_factory=dict, description="Input paths by role")
    output_format: Literal["overlay", "json", "csv"] = Field("overlay", description="Bitrade output format")
    closure_cap: PositiveInt = Field(1_000_000, description="Maximum group closure size")
    search_nodes: PositiveInt = Field(10_000_000, description="Backtracking node budget")
    paper_labels: bool = Field(False, description="Use the published GF(8) labeling")
    method: Literal["algebraic", "direct", "both"] = Field("both", description="Block test method")

    @field_validator("output_format", mode="before")
    @classmethod
    def normalize_format(cls, value: str) -> str:
        return value.lower() if isinstance(value, str) else value


class CdhReport(BaseModel):
    """Counts and side conditions of a coset-constructed bitrade."""
    size: int
    rows: int = Field(..., description="Number of cosets of <a>")
    cols: int = Field(..., description="Number of cosets of <b>")
    symbols: int = Field(..., description="Number of cosets of <c>")
    per_row: int = Field(..., description="|<a>|")
    per_col: int = Field(..., description="|<b>|")
    per_sym: int = Field(..., description="|<c>|")
    primary_condition: bool = Field(..., description="<a, b, c> is the whole group")
    orthogonal_condition: bool = Field(..., description="|C meet aCa^-1| = 1")

    def to_lines(self) -> List[str]:
        return [
            f"size={self.size}",
            f"rows={self.rows}x{self.per_row} cols={self.cols}x{self.per_col} symbols={self.symbols}x{self.per_sym}",
            f"primary_condition={yes_no(self.primary_condition)}",
            f"orthogonal_condition={yes_no(self.orthogonal_condition)}",
        ]


class BridgeCertificate(BaseModel):
    """Isotopy between an orbit bitrade and the matching coset bitrade."""
    conditions: Dict[str, bool] = Field(..., description="C1'-C3' and B1-B4 by name")
    a: int = Field(..., description="Group index of alpha^-1")
    b: int = Field(..., description="Group index of alpha_bar")
    c: int = Field(..., description="Group index of alpha_bar^-1 alpha")
    size: int
    theta: List[Tuple[Tuple[int, int, int], Tuple[int, int, int]]] = Field(
        default_factory=list, description="Entry map from T onto the coset trade"
    )
    theta_mate: List[Tuple[Tuple[int, int, int], Tuple[int, int, int]]] = Field(
        default_factory=list, description="Entry map from T' onto the coset mate"
    )
    preserved: Dict[str, bool] = Field(default_factory=dict, description="Row, column and symbol classes kept, per component")

    @property
    def valid(self) -> bool:
        return all(self.conditions.values()) and bool(self.preserved) and all(self.preserved.values())

    def to_lines(self) -> List[str]:
        lines = [f"certificate={'valid' if self.valid else 'invalid'}", f"size={self.size}"]
        lines.append(f"a={self.a} b={self.b} c={self.c}")
        lines.append("conditions=" + " ".join(f"{k}:{yes_no(v)}" for k, v in self.conditions.items()))
        lines.append("preserved=" + " ".join(f"{k}:{yes_no(v)}" for k, v in sorted(self.preserved.items())))
        return lines
