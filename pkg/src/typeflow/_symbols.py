"""Canonical key-symbol set and its internal numeric codes.

Positive codes insert the character with that codepoint (Space, Enter and Tab
insert ' ', '\\n', '\\t'); negative codes are non-inserting action keys.
Kept dependency-free so both kernel backends can import it.
"""

from __future__ import annotations

from .errors import UnknownKeySymbolError

CODE_BACKSPACE = -1
CODE_DELETE = -2
CODE_LEFT = -3
CODE_RIGHT = -4
CODE_HOME = -5
CODE_END = -6
CODE_SHIFT = -7
CODE_CTRL = -8
CODE_ALT = -9

NAMED_KEY_CODES: dict[str, int] = {
    "Space": 32,
    "Enter": 10,
    "Tab": 9,
    "Backspace": CODE_BACKSPACE,
    "Delete": CODE_DELETE,
    "Left": CODE_LEFT,
    "Right": CODE_RIGHT,
    "Home": CODE_HOME,
    "End": CODE_END,
    "Shift": CODE_SHIFT,
    "Ctrl": CODE_CTRL,
    "Alt": CODE_ALT,
}

CODE_TO_NAME = {code: name for name, code in NAMED_KEY_CODES.items()}

# Common keylogger spellings, matched case-insensitively.
ALIASES: dict[str, str] = {
    " ": "Space",
    "spacebar": "Space",
    "return": "Enter",
    "cr": "Enter",
    "newline": "Enter",
    "bksp": "Backspace",
    "bs": "Backspace",
    "back": "Backspace",
    "del": "Delete",
    "arrowleft": "Left",
    "leftarrow": "Left",
    "arrowright": "Right",
    "rightarrow": "Right",
    "lshift": "Shift",
    "rshift": "Shift",
    "shift_l": "Shift",
    "shift_r": "Shift",
    "control": "Ctrl",
    "lctrl": "Ctrl",
    "rctrl": "Ctrl",
    "control_l": "Ctrl",
    "control_r": "Ctrl",
    "lalt": "Alt",
    "ralt": "Alt",
    "alt_l": "Alt",
    "alt_r": "Alt",
    "comma": ",",
}
for _name in NAMED_KEY_CODES:
    ALIASES[_name.lower()] = _name


def normalize_key_symbol(raw_label: str) -> str:
    """Map a keylogger label onto the canonical symbol set.

    Single letters are lowercased (Shift is a separate event); named keys
    accept common aliases in any case.
    """
    if not raw_label:
        raise UnknownKeySymbolError(raw_label)
    alias = ALIASES.get(raw_label.lower())
    if alias is not None:
        return alias
    if len(raw_label) == 1:
        ch = raw_label.lower()
        if ch.isprintable():
            return ch
    raise UnknownKeySymbolError(raw_label)


def symbol_to_code(symbol: str) -> int:
    code = NAMED_KEY_CODES.get(symbol)
    if code is not None:
        return code
    if len(symbol) == 1 and symbol.isprintable():
        return ord(symbol)
    raise UnknownKeySymbolError(symbol)


def code_to_symbol(code: int) -> str:
    name = CODE_TO_NAME.get(code)
    if name is not None:
        return name
    return chr(code)


def code_for_label(raw_label: str) -> int:
    """Normalize a raw label and return its code (kernel slow path)."""
    return symbol_to_code(normalize_key_symbol(raw_label))


# Multi-character CSV field fast path: lowercased ASCII label bytes -> code.
BYTES_LABEL_CODES: dict[bytes, int] = {
    label.encode("ascii"): symbol_to_code(target)
    for label, target in ALIASES.items()
    if label.isascii()
}
