"""Bit-exact graph6 codec and catalog files.

Format: byte0 is 63+n (n <= 62); the following bytes encode the upper
adjacency triangle in column-major pair order, six bits per byte, big-endian
within each group, zero-padded, each group value offset by 63.  Only the
headerless variant is emitted; a leading ">>graph6<<" marker is skipped on
input.  Orders beyond the package cap of 10 vertices are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bits import n_bits
from .canon import CanonicalCert, canonical_cert
from .errors import (
    BadHeaderError,
    BadLengthError,
    CatalogParseError,
    Graph6Error,
    OrderTooLargeError,
    TrailingGarbageError,
)
from .graphs import MAX_ORDER, Graph, from_mask

_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 record."""
    record = text.strip()
    if record.startswith(_HEADER):
        record = record[len(_HEADER):]
    if not record:
        raise BadLengthError("empty graph6 record")
    first = ord(record[0])
    if first == 126:
        raise OrderTooLargeError("multi-byte order encoding (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise BadHeaderError(f"invalid order byte {record[0]!r}")
    n = first - 63
    if n < 1:
        raise BadHeaderError("graph6 record with zero vertices")
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds supported maximum {MAX_ORDER}")
    body = record[1:]
    nbits = n_bits(n)
    need = (nbits + 5) // 6
    if len(body) < need:
        raise BadLengthError(f"need {need} payload bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise TrailingGarbageError(f"{len(body) - need} extra bytes after payload")
    mask = 0
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise BadLengthError(f"invalid payload byte {ch!r}")
        for b in range(6):
            t = 6 * k + b
            bit = (val >> (5 - b)) & 1
            if t < nbits:
                mask |= bit << t
            elif bit:
                raise TrailingGarbageError("nonzero padding bits")
    return from_mask(n, mask)


def to_graph6(g: Graph) -> str:
    """Encode a graph; parse_graph6(to_graph6(g)) reproduces g exactly."""
    nbits = n_bits(g.n)
    mask = g.mask
    out = [chr(63 + g.n)]
    for k in range((nbits + 5) // 6):
        val = 0
        for b in range(6):
            t = 6 * k + b
            if t < nbits and (mask >> t) & 1:
                val |= 1 << (5 - b)
        out.append(chr(63 + val))
    return "".join(out)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    g6: str
    cert: CanonicalCert


@dataclass
class Catalog:
    """Loaded catalog: entries in file order plus non-fatal warnings."""

    entries: list[CatalogEntry]
    warnings: list[str] = field(default_factory=list)

    def by_cert(self) -> dict[CanonicalCert, str]:
        index: dict[CanonicalCert, str] = {}
        for e in self.entries:
            index.setdefault(e.cert, e.id)
        return index


def load_catalog(path) -> Catalog:
    """Read newline-separated graph6 records, each optionally prefixed by an id.

    Missing ids default to "G<order>-<lineno>".  Duplicate certificates are
    reported as warnings; duplicate ids are an error.
    """
    entries: list[CatalogEntry] = []
    warnings: list[str] = []
    seen_ids: set[str] = set()
    seen_certs: dict[CanonicalCert, str] = {}
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) == 1:
                ident, g6 = None, tokens[0]
            elif len(tokens) == 2:
                ident, g6 = tokens
            else:
                raise CatalogParseError(lineno, f"expected 'id g6' or 'g6', got {len(tokens)} fields")
            try:
                g = parse_graph6(g6)
            except Graph6Error as exc:
                raise CatalogParseError(lineno, f"bad graph6 record {g6!r}: {exc}") from exc
            if ident is None:
                ident = f"G{g.n}-{lineno}"
            if ident in seen_ids:
                raise CatalogParseError(lineno, f"duplicate id {ident!r}")
            seen_ids.add(ident)
            cert = canonical_cert(g)
            if cert in seen_certs:
                warnings.append(
                    f"line {lineno}: {ident} is isomorphic to earlier entry {seen_certs[cert]}")
            else:
                seen_certs[cert] = ident
            entries.append(CatalogEntry(ident, g6, cert))
    return Catalog(entries, warnings)


def identify(g: Graph, catalog: Catalog) -> str | None:
    """Catalog id of the graph's isomorphism class, independent of labeling."""
    return catalog.by_cert().get(canonical_cert(g))
