"""Named example webs bound to CLI shortcuts."""

from __future__ import annotations

from sl3web.ladderweb import LadderWeb, LTWord, build_web

# name -> (word text, strand count, level)
_PRESETS: dict[str, tuple[str, int, int]] = {
    "arc": ("F1^2", 2, 1),
    "theta": ("F1 F2 F1", 3, 1),
    "hexagon": ("F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2", 6, 3),
    "circles-nested": ("F2 F1^2 F3^2 F2^2", 4, 2),
    "circles-split": ("F1^2 F2 F3^2 F2^2", 4, 2),
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset_web(name: str) -> LadderWeb:
    if name not in _PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")
    text, n, ell = _PRESETS[name]
    web = build_web(LTWord.parse(text), n, ell)
    assert web is not None
    return web
