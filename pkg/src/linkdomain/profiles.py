"""Profile parsing and serialization.

Native format (line-oriented UTF-8, hand-writable):

    # comment
    candidates: a, b, c
    2: a > b > c
    1: c > b > a

Exactly one ``candidates:`` line, before any ranking line. Ranking lines
are ``<positive integer>: <name> (> <name>)*``. Surrounding whitespace is
ignored; blank lines are skipped.

PrefLib support covers strict complete orders (.soc style): ``#`` metadata
lines (``NUMBER ALTERNATIVES``, ``ALTERNATIVE NAME <i>`` and ``NUMBER
VOTERS`` are recognized, other keys ignored) followed by data lines
``<count>: <id>,<id>,...`` with 1-based alternative ids. Ties and
incomplete orders are rejected as UnsupportedProfile.

Both parsers accept bytes or str and never raise anything outside the
package error hierarchy; every failure carries a line number.
"""

import re

from .errors import (
    InconsistentMetadata,
    ProfileSyntaxError,
    UnrepresentableName,
    UnsupportedProfile,
)
from .model import Election, validate_election

_RESERVED = (",", ">", "\n", "\r")

_HEADER_PREFIX = "candidates:"
_META_RE = re.compile(r"^#\s*([A-Z][A-Z ]*?)\s*(\d*)\s*:\s*(.*?)\s*$")


def _decode(text: str | bytes) -> str:
    if isinstance(text, str):
        return text
    try:
        return text.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = text.count(b"\n", 0, exc.start) + 1
        raise ProfileSyntaxError(f"invalid UTF-8 ({exc.reason})", line=line) from None


def parse_native(text: str | bytes) -> Election:
    """Parse the native profile format into a validated Election."""
    header: list[str] | None = None
    rankings: list[tuple[list[str], int]] = []
    lines = _decode(text).splitlines()

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(_HEADER_PREFIX):
            if header is not None:
                raise ProfileSyntaxError("second candidates: line", line=line_no, column=1)
            header = [part.strip() for part in line[len(_HEADER_PREFIX):].split(",")]
            for part in header:
                if not part:
                    raise ProfileSyntaxError("empty candidate name in header", line=line_no)
            continue
        if header is None:
            raise ProfileSyntaxError(
                "ranking line before the candidates: header", line=line_no, column=1
            )
        count_part, sep, rest = line.partition(":")
        if not sep:
            raise ProfileSyntaxError("expected '<count>: <ranking>'", line=line_no, column=1)
        count_str = count_part.strip()
        if not (count_str.isascii() and count_str.isdigit()) or int(count_str) < 1:
            raise ProfileSyntaxError(
                f"multiplicity must be a positive integer, got {count_str!r}",
                line=line_no,
                column=_column(raw, count_str),
            )
        names = [part.strip() for part in rest.split(">")]
        for part in names:
            if not part:
                raise ProfileSyntaxError("empty candidate name in ranking", line=line_no)
        rankings.append((names, int(count_str)))

    if header is None:
        raise ProfileSyntaxError("missing candidates: header", line=max(1, len(lines)))
    return validate_election(header, rankings)


def _column(raw_line: str, token: str) -> int:
    pos = raw_line.find(token) if token else -1
    return pos + 1 if pos >= 0 else 1


def parse_preflib_soc(text: str | bytes) -> Election:
    """Parse a PrefLib strict-complete-orders file into a validated Election."""
    m: int | None = None
    declared_voters: int | None = None
    alt_names: dict[int, str] = {}
    rankings: list[tuple[list[str], int]] = []
    total_votes = 0
    lines = _decode(text).splitlines()

    def require_m(line_no: int) -> int:
        if m is None:
            raise InconsistentMetadata("NUMBER ALTERNATIVES was never declared", line=line_no)
        return m

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _META_RE.match(line)
            if not match:
                continue  # free-form comment
            key, index, value = match.group(1).strip(), match.group(2), match.group(3)
            if key == "NUMBER ALTERNATIVES" and not index:
                try:
                    declared = int(value)
                except ValueError:
                    raise ProfileSyntaxError(
                        f"NUMBER ALTERNATIVES is not an integer: {value!r}", line=line_no
                    ) from None
                if m is not None and declared != m:
                    raise InconsistentMetadata(
                        f"NUMBER ALTERNATIVES redeclared as {declared}, was {m}", line=line_no
                    )
                if declared > 1_000_000:
                    raise UnsupportedProfile(
                        f"{declared} alternatives is beyond the supported size", line=line_no
                    )
                m = declared
            elif key == "ALTERNATIVE NAME" and index:
                idx = int(index)
                if idx in alt_names:
                    raise InconsistentMetadata(
                        f"ALTERNATIVE NAME {idx} declared twice", line=line_no
                    )
                alt_names[idx] = value
            elif key == "NUMBER VOTERS" and not index:
                try:
                    declared_voters = int(value)
                except ValueError:
                    raise ProfileSyntaxError(
                        f"NUMBER VOTERS is not an integer: {value!r}", line=line_no
                    ) from None
            # every other key is forward-compatible metadata
            continue

        if "{" in line or "}" in line:
            raise UnsupportedProfile("orders with ties are not supported", line=line_no)
        count_part, sep, rest = line.partition(":")
        if not sep:
            raise ProfileSyntaxError("expected '<count>: <id>,<id>,...'", line=line_no, column=1)
        count_str = count_part.strip()
        if not (count_str.isascii() and count_str.isdigit()) or int(count_str) < 1:
            raise ProfileSyntaxError(
                f"vote count must be a positive integer, got {count_str!r}", line=line_no, column=1
            )
        alternatives = require_m(line_no)
        ids = []
        for token in rest.split(","):
            token = token.strip()
            if not re.fullmatch(r"-?\d+", token):
                raise ProfileSyntaxError(
                    f"alternative id is not an integer: {token!r}", line=line_no
                )
            ids.append(int(token))
        if len(ids) != alternatives:
            raise UnsupportedProfile(
                f"expected a complete order over {alternatives} alternatives, got {len(ids)}",
                line=line_no,
            )
        for alt in ids:
            if not 1 <= alt <= alternatives:
                raise InconsistentMetadata(
                    f"alternative id {alt} outside 1..{alternatives}", line=line_no
                )
        count = int(count_str)
        total_votes += count
        rankings.append(([_alt_name(alt_names, alt) for alt in ids], count))

    eof = max(1, len(lines))
    alternatives = require_m(eof)
    for idx in alt_names:
        if not 1 <= idx <= alternatives:
            raise InconsistentMetadata(
                f"ALTERNATIVE NAME {idx} outside 1..{alternatives}", line=eof
            )
    if declared_voters is not None and declared_voters != total_votes:
        raise InconsistentMetadata(
            f"NUMBER VOTERS is {declared_voters} but data lines sum to {total_votes}", line=eof
        )
    names = [_alt_name(alt_names, i) for i in range(1, alternatives + 1)]
    return validate_election(names, rankings)


def _alt_name(alt_names: dict[int, str], idx: int) -> str:
    return alt_names.get(idx, str(idx))


def write_native(election: Election) -> str:
    """Serialize an Election to the native format; parse_native inverts this exactly."""
    for name in election.names:
        if any(ch in name for ch in _RESERVED):
            raise UnrepresentableName(
                f"candidate name {name!r} contains a reserved character (',', '>', newline)"
            )
    lines = ["candidates: " + ", ".join(election.names)]
    names = election.names
    for ranking, mult in election.votes:
        lines.append(f"{mult}: " + " > ".join(names[c] for c in ranking))
    return "\n".join(lines) + "\n"
