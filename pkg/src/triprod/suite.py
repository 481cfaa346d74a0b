"""The built-in identity suite shipped with the package."""

from __future__ import annotations

from importlib import resources

# Facts that only hold in associative dimensions; appended to the suite when
# dim <= 4 so a quaternion run reports the stronger statements directly.
ASSOCIATIVE_EXTRAS = (
    "(u1*u2)*u3 == u1*(u2*u3)",
    "assoc(u1,u2,u3) == 0*i0",
)


def strip_lines(text: str) -> list[str]:
    """Identity lines from file text: one per line, '#' comments, blanks skipped."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def builtin_lines(dim: int = 8) -> list[str]:
    """All built-in identities, plus the associative extras when dim <= 4."""
    text = resources.files("triprod").joinpath("data/suite.txt").read_text("utf-8")
    lines = strip_lines(text)
    if dim <= 4:
        lines.extend(ASSOCIATIVE_EXTRAS)
    return lines
