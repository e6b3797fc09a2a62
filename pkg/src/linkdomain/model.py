"""Core election model: candidates, votes, and validated elections.

Candidates are referenced internally by dense integer id (0..m-1); display
names appear only at I/O boundaries. A vote is a complete strict ranking,
stored as a tuple of candidate ids, most-preferred first. Duplicate
rankings are kept with an explicit multiplicity instead of being expanded.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateCandidateName,
    EmptyCandidateName,
    EmptyCandidateSet,
    IncompleteRanking,
    InvalidElection,
    NonPositiveMultiplicity,
    TooFewCandidates,
    UnknownCandidate,
    Violation,
)

Vote = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Candidate:
    id: int
    name: str


@dataclass(frozen=True)
class Election:
    """A candidate set plus a multiset of complete strict rankings.

    votes holds (ranking, multiplicity) pairs in input order; the same
    ranking may appear on several lines. All types are immutable after
    construction and safe to share across threads.
    """

    candidates: tuple[Candidate, ...]
    votes: tuple[tuple[Vote, int], ...]

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.votes)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.candidates)


def default_names(m: int) -> tuple[str, ...]:
    """Deterministic display names: a..z, then aa, ab, ... (bijective base 26)."""
    names = []
    for i in range(m):
        k, chars = i + 1, []
        while k:
            k, r = divmod(k - 1, 26)
            chars.append(chr(ord("a") + r))
        names.append("".join(reversed(chars)))
    return tuple(names)


def validate_election(
    names: Iterable[str],
    rankings: Iterable[tuple[Sequence[str], int]],
) -> Election:
    """Build an Election from raw candidate names and name-based rankings.

    Args:
        names: candidate display names, in id order; surrounding whitespace
            is trimmed.
        rankings: (sequence of names most-preferred first, multiplicity)
            pairs.

    Returns:
        A well-formed Election.

    Raises:
        InvalidElection: listing every violation found
            (DuplicateCandidateName, UnknownCandidate, IncompleteRanking,
            EmptyCandidateSet, NonPositiveMultiplicity).
    """
    violations: list[Violation] = []

    trimmed = [str(name).strip() for name in names]
    if not trimmed:
        violations.append(EmptyCandidateSet("candidate set is empty"))
    seen: dict[str, int] = {}
    for i, name in enumerate(trimmed):
        if not name:
            violations.append(EmptyCandidateName(f"candidate {i} has an empty name"))
        elif name in seen:
            violations.append(DuplicateCandidateName(f"duplicate candidate name {name!r}"))
        else:
            seen[name] = i

    m = len(trimmed)
    votes: list[tuple[Vote, int]] = []
    for line_no, (raw_ranking, mult) in enumerate(rankings, start=1):
        if mult < 1:
            violations.append(
                NonPositiveMultiplicity(f"vote {line_no}: multiplicity {mult} is not positive")
            )
        ids: list[int] = []
        ok = True
        for raw in raw_ranking:
            name = str(raw).strip()
            cid = seen.get(name)
            if cid is None:
                violations.append(UnknownCandidate(f"vote {line_no}: unknown candidate {name!r}"))
                ok = False
            else:
                ids.append(cid)
        if ok and (len(ids) != m or len(set(ids)) != m):
            violations.append(
                IncompleteRanking(
                    f"vote {line_no}: ranking is not a permutation of the {m} candidates"
                )
            )
            ok = False
        if ok:
            votes.append((tuple(ids), mult))

    if violations:
        raise InvalidElection(violations)
    candidates = tuple(Candidate(i, name) for i, name in enumerate(trimmed))
    return Election(candidates, tuple(votes))


def election_from_ids(
    votes: Iterable[tuple[Sequence[int], int]],
    m: int,
    names: Sequence[str] | None = None,
) -> Election:
    """Assemble an Election from id-based rankings (generator/test plumbing)."""
    name_list = tuple(names) if names is not None else default_names(m)
    if len(name_list) != m:
        raise ValueError(f"expected {m} names, got {len(name_list)}")
    packed: list[tuple[Vote, int]] = []
    for ranking, mult in votes:
        vote = tuple(ranking)
        if sorted(vote) != list(range(m)):
            raise InvalidElection(
                [IncompleteRanking(f"ranking {vote} is not a permutation of 0..{m - 1}")]
            )
        if mult < 1:
            raise InvalidElection(
                [NonPositiveMultiplicity(f"multiplicity {mult} is not positive")]
            )
        packed.append((vote, mult))
    candidates = tuple(Candidate(i, name) for i, name in enumerate(name_list))
    return Election(candidates, tuple(packed))


def top_two(vote: Sequence[int]) -> tuple[int, int]:
    """First and second entry of a ranking, the only positions connectivity consumes."""
    if len(vote) < 2:
        raise TooFewCandidates("top_two needs a ranking over at least two candidates")
    return vote[0], vote[1]
