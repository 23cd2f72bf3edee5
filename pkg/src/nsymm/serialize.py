"""Text rendering and JSON-able data forms for every documented schema.

Polynomials serialize as {"basis": tag, "terms": [{"word": [...],
"coeff": {"num": "...", "den": "..."}}]} with terms in the term order
(weight, length, lex); numerators and denominators travel as decimal
strings so round-trips are bit-exact.  Tensors carry left_word and
right_word instead.  Test algebras and map families use exact rational
strings ("-3/2") throughout.
"""

from __future__ import annotations

from fractions import Fraction

from .hsops import LinMap, TestAlgebra
from .poly import NCPoly, Tensor2
from .qsymm import QSPoly

BASIS_PREFIX = {"Z": "Z", "U": "U", "Pprime": "P'"}
KNOWN_BASES = ("Z", "U", "Pprime", "M")


class FormatError(ValueError):
    """Input data does not match a documented schema."""


def _check_basis(basis: str) -> str:
    if basis not in KNOWN_BASES:
        raise FormatError(f"unknown basis tag {basis!r}; expected one of {KNOWN_BASES}")
    return basis


# ---------------------------------------------------------------------------
# text rendering


def render_word(word, basis: str = "Z") -> str | None:
    """One monomial, or None for the empty word of a letter basis."""
    _check_basis(basis)
    if basis == "M":
        return f"M({','.join(str(p) for p in word)})" if word else None
    if not word:
        return None
    prefix = BASIS_PREFIX[basis]
    return "·".join(f"{prefix}{p}" for p in word)


def _coefficient_chunk(coefficient: Fraction, body: str | None) -> str:
    a = abs(coefficient)
    if body is None:
        return str(a)
    if a == 1:
        return body
    if a.denominator == 1:
        return f"{a}·{body}"
    return f"({a})·{body}"


def _join_signed(chunks) -> str:
    out = []
    for negative, chunk in chunks:
        if not out:
            out.append(f"-{chunk}" if negative else chunk)
        else:
            out.append(f" - {chunk}" if negative else f" + {chunk}")
    return "".join(out)


def render_poly(p, basis: str = "Z") -> str:
    _check_basis(basis)
    if not p:
        return "0"
    return _join_signed(
        (coefficient < 0, _coefficient_chunk(coefficient, render_word(word, basis)))
        for word, coefficient in p.items()
    )


def render_tensor(t: Tensor2, basis: str = "Z") -> str:
    _check_basis(basis)
    if not t:
        return "0"
    chunks = []
    for (left, right), coefficient in t.items():
        body = f"{render_word(left, basis) or '1'}⊗{render_word(right, basis) or '1'}"
        chunks.append((coefficient < 0, _coefficient_chunk(coefficient, body)))
    return _join_signed(chunks)


# ---------------------------------------------------------------------------
# polynomials and tensors as data


def _coeff_data(coefficient: Fraction) -> dict:
    return {"num": str(coefficient.numerator), "den": str(coefficient.denominator)}


def _coeff_from_data(data, path: str) -> Fraction:
    if not isinstance(data, dict) or set(data) != {"num", "den"}:
        raise FormatError(f"{path}: expected a {{num, den}} object")
    try:
        num = int(str(data["num"]), 10)
        den = int(str(data["den"]), 10)
    except ValueError as exc:
        raise FormatError(f"{path}: not a decimal integer: {exc}") from None
    if den < 1:
        raise FormatError(f"{path}: denominator must be >= 1, got {den}")
    return Fraction(num, den)


def _word_from_data(data, path: str) -> tuple:
    if not isinstance(data, list) or not all(isinstance(p, int) and p >= 1 for p in data):
        raise FormatError(f"{path}: expected a list of integers >= 1")
    return tuple(data)


def poly_to_data(p, basis: str) -> dict:
    _check_basis(basis)
    return {
        "basis": basis,
        "terms": [
            {"word": list(word), "coeff": _coeff_data(coefficient)}
            for word, coefficient in p.items()
        ],
    }


def poly_from_data(data, cls=NCPoly):
    """Rebuild a polynomial; returns (poly, basis_tag)."""
    if not isinstance(data, dict) or "basis" not in data or "terms" not in data:
        raise FormatError("$: expected an object with 'basis' and 'terms'")
    basis = _check_basis(data["basis"])
    if basis == "M" and cls is NCPoly:
        cls = QSPoly
    terms = {}
    if not isinstance(data["terms"], list):
        raise FormatError("$.terms: expected a list")
    for t, record in enumerate(data["terms"]):
        path = f"$.terms[{t}]"
        if not isinstance(record, dict) or "word" not in record or "coeff" not in record:
            raise FormatError(f"{path}: expected an object with 'word' and 'coeff'")
        word = _word_from_data(record["word"], f"{path}.word")
        if word in terms:
            raise FormatError(f"{path}: duplicate word {list(word)}")
        terms[word] = _coeff_from_data(record["coeff"], f"{path}.coeff")
    return cls(terms), basis


def tensor_to_data(t: Tensor2, basis: str) -> dict:
    _check_basis(basis)
    return {
        "basis": basis,
        "terms": [
            {
                "left_word": list(left),
                "right_word": list(right),
                "coeff": _coeff_data(coefficient),
            }
            for (left, right), coefficient in t.items()
        ],
    }


def tensor_from_data(data):
    if not isinstance(data, dict) or "basis" not in data or "terms" not in data:
        raise FormatError("$: expected an object with 'basis' and 'terms'")
    basis = _check_basis(data["basis"])
    terms = {}
    for t, record in enumerate(data["terms"]):
        path = f"$.terms[{t}]"
        if not isinstance(record, dict) or not {"left_word", "right_word", "coeff"} <= set(record):
            raise FormatError(f"{path}: expected left_word, right_word, and coeff")
        key = (
            _word_from_data(record["left_word"], f"{path}.left_word"),
            _word_from_data(record["right_word"], f"{path}.right_word"),
        )
        if key in terms:
            raise FormatError(f"{path}: duplicate tensor word pair")
        terms[key] = _coeff_from_data(record["coeff"], f"{path}.coeff")
    return Tensor2(terms), basis


# ---------------------------------------------------------------------------
# test algebras and map families as data


def _rational_str(value: Fraction) -> str:
    return str(value)


def _rational_from_str(data, path: str) -> Fraction:
    if not isinstance(data, str):
        raise FormatError(f"{path}: scalars must be exact rational strings like '-3/2'")
    try:
        return Fraction(data)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{path}: {exc}") from None


def _vector_data(vec) -> list[str]:
    return [_rational_str(c) for c in vec]


def _vector_from_data(data, dim: int, path: str) -> tuple:
    if not isinstance(data, list) or len(data) != dim:
        raise FormatError(f"{path}: expected a list of {dim} rational strings")
    return tuple(_rational_from_str(c, f"{path}[{k}]") for k, c in enumerate(data))


def algebra_to_data(algebra: TestAlgebra) -> dict:
    constants = []
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            vec = algebra.table[i][j]
            if any(vec):
                constants.append([i, j, _vector_data(vec)])
    return {
        "labels": list(algebra.labels),
        "unit": _vector_data(algebra.unit),
        "structure_constants": constants,
    }


def algebra_from_data(data) -> TestAlgebra:
    if not isinstance(data, dict) or not {"labels", "unit", "structure_constants"} <= set(data):
        raise FormatError("$.algebra: expected labels, unit, and structure_constants")
    labels = data["labels"]
    if not isinstance(labels, list) or not labels or not all(isinstance(l, str) for l in labels):
        raise FormatError("$.algebra.labels: expected a nonempty list of strings")
    dim = len(labels)
    unit = _vector_from_data(data["unit"], dim, "$.algebra.unit")
    products = {}
    if not isinstance(data["structure_constants"], list):
        raise FormatError("$.algebra.structure_constants: expected a list")
    for t, entry in enumerate(data["structure_constants"]):
        path = f"$.algebra.structure_constants[{t}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FormatError(f"{path}: expected [i, j, vector]")
        i, j, vec = entry
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < dim and 0 <= j < dim):
            raise FormatError(f"{path}: basis indices out of range")
        if (i, j) in products:
            raise FormatError(f"{path}: duplicate product entry ({i}, {j})")
        products[(i, j)] = _vector_from_data(vec, dim, f"{path}[2]")
    try:
        return TestAlgebra.from_products(tuple(labels), unit, products)
    except ValueError as exc:
        raise FormatError(f"$.algebra: {exc}") from None


def _matrix_data(linmap: LinMap) -> dict:
    return {"columns": [_vector_data(col) for col in linmap.columns]}


def _matrix_from_data(data, dim: int, path: str) -> LinMap:
    if not isinstance(data, dict) or "columns" not in data:
        raise FormatError(f"{path}: expected an object with 'columns'")
    cols = data["columns"]
    if not isinstance(cols, list) or len(cols) != dim:
        raise FormatError(f"{path}.columns: expected {dim} columns")
    return LinMap(
        tuple(_vector_from_data(col, dim, f"{path}.columns[{k}]") for k, col in enumerate(cols))
    )


def family_to_data(algebra: TestAlgebra, maps) -> dict:
    return {"algebra": algebra_to_data(algebra), "maps": [_matrix_data(m) for m in maps]}


def derivations_to_data(algebra: TestAlgebra, maps) -> dict:
    return {"algebra": algebra_to_data(algebra), "derivations": [_matrix_data(m) for m in maps]}


def _algebra_and_matrices(data, key: str):
    if not isinstance(data, dict) or "algebra" not in data or key not in data:
        raise FormatError(f"$: expected an object with 'algebra' and {key!r}")
    algebra = algebra_from_data(data["algebra"])
    if not isinstance(data[key], list):
        raise FormatError(f"$.{key}: expected a list of matrices")
    maps = tuple(
        _matrix_from_data(m, algebra.dim, f"$.{key}[{t}]") for t, m in enumerate(data[key])
    )
    return algebra, maps


def family_from_data(data):
    """Parse {algebra, maps}; returns (TestAlgebra, tuple[LinMap]) unvalidated."""
    return _algebra_and_matrices(data, "maps")


def derivations_from_data(data):
    """Parse {algebra, derivations}; returns (TestAlgebra, tuple[LinMap]) unvalidated."""
    return _algebra_and_matrices(data, "derivations")
