"""Byte substitution boxes from linear fractional transformations over GF(2^8).

A transform g(z) = (az+b)/(cz+d) with ad+bc != 0 permutes GF(2^8) plus a
point at infinity.  Restricted to bytes it is made total by pairing the
unique pole (the z with cz+d = 0) with the image of infinity a/c, which is
the one convention that keeps the byte map a bijection.  One S-box is
produced per primitive reduction polynomial, giving a family of 16.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import golden
from .gf2n import FieldSpec, field


class SBoxFormatError(ValueError):
    """Raw S-box input has the wrong shape (length, token count, ...)."""


class DegenerateLftError(ValueError):
    """ad + bc = 0: the transform is constant, not invertible."""


@dataclass(frozen=True)
class TableAudit:
    """Result of scanning a 256-entry table for bijectivity."""

    bijective: bool
    duplicates: dict[int, int]  # value -> number of occurrences (> 1)
    missing: tuple[int, ...]

    def describe(self) -> str:
        if self.bijective:
            return "bijective"
        dups = ", ".join(f"{v} (x{c})" for v, c in sorted(self.duplicates.items()))
        miss = ", ".join(str(v) for v in self.missing)
        return f"not a bijection: duplicated values {dups}; missing values {miss}"


class SBoxValidationError(ValueError):
    """Table is not a bijection; .audit carries the duplicate/missing scan."""

    def __init__(self, audit: TableAudit):
        super().__init__(audit.describe())
        self.audit = audit


@dataclass(frozen=True)
class LftParams:
    """Coefficients of g(z) = (az+b)/(cz+d) plus the polynomial selector.

    poly_index is 1-based into the golden primitive polynomial list.
    """

    a: int
    b: int
    c: int
    d: int
    poly_index: int = 1

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not 0 <= v <= 255:
                raise ValueError(f"coefficient {name}={v} out of byte range")
        if not 1 <= self.poly_index <= len(golden.PRIMITIVE_POLY_MASKS):
            raise ValueError(f"poly_index {self.poly_index} not in 1..16")

    @property
    def reduction(self) -> int:
        return golden.PRIMITIVE_POLY_MASKS[self.poly_index - 1]


@dataclass(frozen=True)
class LftSBox:
    """A 256-entry byte bijection with its inverse and provenance."""

    table: bytes
    inverse: bytes
    provenance: LftParams | str = "external"

    def __post_init__(self) -> None:
        if len(self.table) != 256 or len(self.inverse) != 256:
            raise SBoxFormatError("S-box tables must have exactly 256 entries")
        audit = validate_table(self.table)
        if not audit.bijective:
            raise SBoxValidationError(audit)
        for v in range(256):
            if self.inverse[self.table[v]] != v:
                raise ValueError(f"inverse table inconsistent at input {v}")

    def apply(self, v: int) -> int:
        return self.table[v]

    def apply_inverse(self, v: int) -> int:
        return self.inverse[v]

    def to_text(self) -> str:
        return format_table_text(self.table)

    def to_bytes(self) -> bytes:
        return self.table


def validate_table(raw) -> TableAudit:
    """Scan a 256-entry table for duplicated and missing byte values."""
    vals = list(raw)
    if len(vals) != 256:
        raise SBoxFormatError(f"expected 256 entries, got {len(vals)}")
    counts = [0] * 256
    for v in vals:
        if not 0 <= v <= 255:
            raise SBoxFormatError(f"entry {v} out of byte range")
        counts[v] += 1
    duplicates = {v: c for v, c in enumerate(counts) if c > 1}
    missing = tuple(v for v, c in enumerate(counts) if c == 0)
    return TableAudit(not duplicates and not missing, duplicates, missing)


def invert_table(raw) -> list[int]:
    """Inverse of a bijective 256-entry table; raises with the audit if not."""
    audit = validate_table(raw)
    if not audit.bijective:
        raise SBoxValidationError(audit)
    inv = [0] * 256
    for i, v in enumerate(raw):
        inv[v] = i
    return inv


def build_sbox(params: LftParams) -> LftSBox:
    """Evaluate g(z) = (az+b)/(cz+d) over all bytes under the selected field.

    For c != 0 the pole z* = d/c is sent to a/c (the image of infinity),
    closing the bijection; for c = 0 the map is affine and total.
    """
    spec = field(params.reduction)
    return _build_sbox_in_field(spec, params)


def _build_sbox_in_field(spec: FieldSpec, params: LftParams) -> LftSBox:
    a, b, c, d = params.a, params.b, params.c, params.d
    det = spec.mul(a, d) ^ spec.mul(b, c)
    if det == 0:
        raise DegenerateLftError(
            f"degenerate transformation: ad+bc = 0 for (a,b,c,d)=({a},{b},{c},{d}) "
            f"under {spec.reduction.monomials()}"
        )
    table = bytearray(256)
    for z in range(256):
        den = spec.mul(c, z) ^ d
        num = spec.mul(a, z) ^ b
        if den == 0:
            table[z] = spec.div(a, c)
        elif num == 0:
            table[z] = 0
        else:
            table[z] = spec.div(num, den)
    inverse = bytes(invert_table(table))
    return LftSBox(bytes(table), inverse, params)


def build_family(
    a: int, b: int, c: int, d: int, polys: tuple[int, ...] | None = None
) -> tuple[LftSBox, ...]:
    """One S-box per primitive polynomial for fixed (a, b, c, d).

    With the default polynomial list each box carries LftParams provenance;
    a custom list gets string provenance naming the reduction polynomial.
    """
    boxes: list[LftSBox] = []
    if polys is None:
        for i in range(1, len(golden.PRIMITIVE_POLY_MASKS) + 1):
            boxes.append(build_sbox(LftParams(a, b, c, d, poly_index=i)))
        return tuple(boxes)
    for mask in polys:
        spec = field(mask)
        if not spec.is_primitive:
            raise ValueError(f"{spec.reduction.monomials()} is not primitive")
        params = LftParams(a, b, c, d)
        box = _build_sbox_in_field(spec, params)
        provenance = f"lft({a},{b},{c},{d}) mod {spec.reduction.to_hex()}"
        boxes.append(LftSBox(box.table, box.inverse, provenance))
    return tuple(boxes)


def invert_sbox(s: LftSBox | bytes | list[int]) -> LftSBox:
    """Swap a box with its inverse; applying both in order is the identity.

    Raw 256-entry tables are accepted and validated; a non-bijective table
    raises SBoxValidationError listing its duplicated and missing values.
    """
    if isinstance(s, LftSBox):
        return LftSBox(s.inverse, s.table, s.provenance)
    inv = invert_table(s)
    return LftSBox(bytes(inv), bytes(list(s)), "external")


def load_external_sbox(raw: bytes) -> LftSBox:
    """Wrap 256 raw bytes as an S-box; non-bijective input raises with the scan."""
    if len(raw) != 256:
        raise SBoxFormatError(f"expected exactly 256 bytes, got {len(raw)}")
    inv = invert_table(raw)
    return LftSBox(bytes(raw), bytes(inv), "external")


def format_table_text(table) -> str:
    """16 lines of 16 space-separated decimal bytes."""
    vals = list(table)
    if len(vals) != 256:
        raise SBoxFormatError(f"expected 256 entries, got {len(vals)}")
    lines = []
    for r in range(16):
        lines.append(" ".join(str(v) for v in vals[16 * r : 16 * r + 16]))
    return "\n".join(lines) + "\n"


def parse_table_text(text: str) -> list[int]:
    """Parse the 16x16 decimal text layout back into a flat table."""
    tokens = text.split()
    if len(tokens) != 256:
        raise SBoxFormatError(f"expected 256 values, got {len(tokens)}")
    try:
        vals = [int(t) for t in tokens]
    except ValueError as e:
        raise SBoxFormatError(f"non-numeric S-box entry: {e}") from None
    for v in vals:
        if not 0 <= v <= 255:
            raise SBoxFormatError(f"entry {v} out of byte range")
    return vals


@dataclass(frozen=True)
class ReferenceAudit:
    """Comparison of the published reference table with the canonical build."""

    audit: TableAudit
    canonical_matches: int
    mismatched_positions: tuple[int, ...] = dc_field(repr=False, default=())


def reference_audit() -> ReferenceAudit:
    """Audit the embedded reference table against canonical field arithmetic.

    The reference table is not a bijection as printed, and the canonical
    construction under the first polynomial agrees with it on only a
    handful of entries; the table therefore stays reference data only.
    """
    ref = golden.REFERENCE_SBOX
    audit = validate_table(ref)
    canonical = build_sbox(LftParams(*golden.DEFAULT_LFT, poly_index=1))
    mism = tuple(z for z in range(256) if canonical.table[z] != ref[z])
    return ReferenceAudit(audit, 256 - len(mism), mism)
