"""Document format: JSON with exact rationals as strings.

A document carries an algebra and optionally the attached forms:

    {
      "dim": 5,
      "commutative": true,
      "products": [{"i": 1, "j": 1, "k": 2, "c": "1"}, ...],
      "alpha": ["0", "0", "0", "0", "1"],
      "omega": [{"i": 1, "j": 4, "c": "1"}, {"i": 2, "j": 3, "c": "2"}],
      "maps": {"D": [["0", ...], ...]},
      "claims": {"is_cosymplectic": true}
    }

With "commutative": true only i <= j product entries are stored and they
are mirrored on parsing.  Emission is canonical: sorted keys, sorted
index triples, two-space indent, rationals as "p/q" with the sign on the
numerator.  parse(emit(d)) == d and emit(parse(t)) == t on canonical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra, algebra_from_products
from .exact_core import Mat, Vec, ZERO, rat, rat_str
from .forms import SKEW, BilinearForm, CosymplecticStructure, covector, skew_form


class DocumentError(ValueError):
    """Parse/validation failure with an entry location."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass(frozen=True)
class Document:
    dim: int
    commutative: bool = True
    products: tuple[tuple[int, int, int, Fraction], ...] = ()
    alpha: Vec | None = None
    omega: tuple[tuple[int, int, Fraction], ...] | None = None
    maps: tuple[tuple[str, Mat], ...] = ()
    claims: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "products", tuple(sorted(self.products)))
        object.__setattr__(self, "maps", tuple(sorted(self.maps)))
        object.__setattr__(self, "claims", tuple(sorted(self.claims)))
        if self.omega is not None:
            object.__setattr__(self, "omega", tuple(sorted(self.omega)))

    def map_named(self, name: str) -> Mat | None:
        for key, value in self.maps:
            if key == name:
                return value
        return None


def _parse_rat(value, location: str) -> Fraction:
    if not isinstance(value, (str, int)):
        raise DocumentError(location, f"expected a rational string, got {value!r}")
    try:
        return rat(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(location, f"malformed rational {value!r} ({exc})") from None


def _parse_index(value, location: str, dim: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(location, f"expected an integer index, got {value!r}")
    if not 1 <= value <= dim:
        raise DocumentError(location, f"index {value} out of range 1..{dim}")
    return value


def parse(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    if not isinstance(raw, dict):
        raise DocumentError("document", "top level must be an object")
    known = {"dim", "commutative", "products", "alpha", "omega", "maps", "claims"}
    for key in raw:
        if key not in known:
            raise DocumentError(key, "unknown document key")
    if "dim" not in raw or not isinstance(raw["dim"], int) or raw["dim"] < 1:
        raise DocumentError("dim", "a positive integer dimension is required")
    dim = raw["dim"]
    commutative = raw.get("commutative", True)
    if not isinstance(commutative, bool):
        raise DocumentError("commutative", "must be a boolean")

    products = []
    seen = set()
    for pos, entry in enumerate(raw.get("products", [])):
        loc = f"products[{pos}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "k", "c"}:
            raise DocumentError(loc, "expected an object with keys i, j, k, c")
        i = _parse_index(entry["i"], f"{loc}.i", dim)
        j = _parse_index(entry["j"], f"{loc}.j", dim)
        k = _parse_index(entry["k"], f"{loc}.k", dim)
        c = _parse_rat(entry["c"], f"{loc}.c")
        if commutative and i > j:
            raise DocumentError(loc, "commutative documents store only i <= j entries")
        if (i, j, k) in seen:
            raise DocumentError(loc, f"duplicate product entry ({i},{j},{k})")
        seen.add((i, j, k))
        products.append((i, j, k, c))

    alpha = None
    if "alpha" in raw:
        if not isinstance(raw["alpha"], list) or len(raw["alpha"]) != dim:
            raise DocumentError("alpha", f"expected a list of {dim} rationals")
        alpha = tuple(_parse_rat(v, f"alpha[{pos}]") for pos, v in enumerate(raw["alpha"]))

    omega = None
    if "omega" in raw:
        omega_entries = []
        seen_omega = set()
        for pos, entry in enumerate(raw["omega"]):
            loc = f"omega[{pos}]"
            if not isinstance(entry, dict) or set(entry) != {"i", "j", "c"}:
                raise DocumentError(loc, "expected an object with keys i, j, c")
            i = _parse_index(entry["i"], f"{loc}.i", dim)
            j = _parse_index(entry["j"], f"{loc}.j", dim)
            if not i < j:
                raise DocumentError(loc, "skew entries require i < j")
            if (i, j) in seen_omega:
                raise DocumentError(loc, f"duplicate omega entry ({i},{j})")
            seen_omega.add((i, j))
            omega_entries.append((i, j, _parse_rat(entry["c"], f"{loc}.c")))
        omega = tuple(omega_entries)

    maps = []
    if "maps" in raw:
        if not isinstance(raw["maps"], dict):
            raise DocumentError("maps", "expected an object of named matrices")
        for name, rows in raw["maps"].items():
            loc = f"maps.{name}"
            if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
                raise DocumentError(loc, "expected a list of rows")
            width = len(rows[0])
            matrix = []
            for rpos, row in enumerate(rows):
                if len(row) != width:
                    raise DocumentError(f"{loc}[{rpos}]", "ragged matrix rows")
                matrix.append(tuple(_parse_rat(v, f"{loc}[{rpos}][{cpos}]") for cpos, v in enumerate(row)))
            maps.append((name, tuple(matrix)))

    claims = []
    if "claims" in raw:
        if not isinstance(raw["claims"], dict):
            raise DocumentError("claims", "expected an object")
        claims = [(str(k), v) for k, v in raw["claims"].items()]

    return Document(dim, commutative, tuple(products), alpha, omega, tuple(maps), tuple(claims))


def emit(doc: Document) -> str:
    payload: dict = {"dim": doc.dim, "commutative": doc.commutative}
    payload["products"] = [
        {"i": i, "j": j, "k": k, "c": rat_str(c)} for (i, j, k, c) in sorted(doc.products)
    ]
    if doc.alpha is not None:
        payload["alpha"] = [rat_str(v) for v in doc.alpha]
    if doc.omega is not None:
        payload["omega"] = [{"i": i, "j": j, "c": rat_str(c)} for (i, j, c) in sorted(doc.omega)]
    if doc.maps:
        payload["maps"] = {
            name: [[rat_str(v) for v in row] for row in matrix] for name, matrix in doc.maps
        }
    if doc.claims:
        payload["claims"] = dict(doc.claims)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# -- conversion to and from domain objects --------------------------------------


def document_to_algebra(doc: Document) -> Algebra:
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j, k, c) in doc.products:
        products.setdefault((i, j), {})[k] = c
    return algebra_from_products(doc.dim, products, commutative=doc.commutative)


def document_alpha(doc: Document) -> Vec:
    if doc.alpha is None:
        raise DocumentError("alpha", "document carries no 1-form")
    return doc.alpha


def document_omega(doc: Document) -> BilinearForm:
    if doc.omega is None:
        raise DocumentError("omega", "document carries no 2-form")
    return skew_form(doc.dim, {(i, j): c for (i, j, c) in doc.omega})


def document_to_structure(doc: Document) -> CosymplecticStructure:
    return CosymplecticStructure.build(
        document_to_algebra(doc), document_alpha(doc), document_omega(doc)
    )


def algebra_to_document(
    a: Algebra,
    alpha: Vec | None = None,
    omega: BilinearForm | None = None,
    maps: dict[str, Mat] | None = None,
    claims: dict | None = None,
) -> Document:
    products = []
    for i in range(1, a.dim + 1):
        j_start = i if a.commutative else 1
        for j in range(j_start, a.dim + 1):
            entry = a.basis_product(i, j)
            for k in range(1, a.dim + 1):
                if entry[k - 1] != 0:
                    products.append((i, j, k, entry[k - 1]))
    omega_entries = None
    if omega is not None:
        if omega.symmetry != SKEW:
            raise DocumentError("omega", "documents carry skew 2-forms only")
        omega_entries = tuple(
            (i + 1, j + 1, omega.matrix[i][j])
            for i in range(a.dim)
            for j in range(i + 1, a.dim)
            if omega.matrix[i][j] != 0
        )
    return Document(
        dim=a.dim,
        commutative=a.commutative,
        products=tuple(products),
        alpha=alpha,
        omega=omega_entries,
        maps=tuple((maps or {}).items()),
        claims=tuple((claims or {}).items()),
    )


def structure_to_document(s: CosymplecticStructure, claims: dict | None = None) -> Document:
    return algebra_to_document(s.algebra, alpha=s.alpha, omega=s.omega, claims=claims)
