"""Immutable byte texts with 1-based positions."""

from dataclasses import dataclass

from .errors import EmptyString


@dataclass(frozen=True)
class Text:
    """A byte string with 1-based external positions.

    ``T[i..j]`` is empty whenever ``i > j``; valid single positions are
    ``1 <= i <= n``.
    """

    data: bytes

    @property
    def n(self) -> int:
        return len(self.data)

    def char(self, i: int) -> int:
        """Byte value at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return self.data[i - 1]

    def sub(self, i: int, j: int) -> bytes:
        """Substring at 1-based inclusive positions [i..j]; empty if i > j."""
        if i > j:
            return b""
        return self.data[i - 1 : j]

    def __len__(self) -> int:
        return len(self.data)


def build_text(raw: bytes, strip_trailing_newline: bool = False) -> Text:
    """Wrap raw bytes as a Text, optionally removing one trailing LF."""
    if strip_trailing_newline and raw.endswith(b"\n"):
        raw = raw[:-1]
    return Text(bytes(raw))


def smallest_period(s: bytes) -> int:
    """Smallest p >= 1 with s[i] == s[i+p] for all valid i.

    Every string has period |s|, so the result is always in 1..|s|.
    """
    if len(s) == 0:
        raise EmptyString("smallest_period requires a nonempty string")
    for p in range(1, len(s)):
        if s[p:] == s[:-p]:
            return p
    return len(s)
