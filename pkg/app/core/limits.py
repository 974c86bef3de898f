"""Engine caps read from ``settings.ALGEBRA``, overridable for the duration of one run."""
from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any, Iterator

from django.conf import settings

_overrides: ContextVar[dict[str, Any]] = ContextVar("algebra_overrides", default={})


def algebra_setting(name: str) -> Any:
    overrides = _overrides.get()
    if name in overrides:
        return overrides[name]
    return settings.ALGEBRA[name]


@contextmanager
def algebra_caps(**caps: Any) -> Iterator[None]:
    """Override ``ALGEBRA`` keys such as ``MAX_COSETS``; ``None`` values are ignored."""
    given = {name: value for name, value in caps.items() if value is not None}
    token = _overrides.set({**_overrides.get(), **given})
    try:
        yield
    finally:
        _overrides.reset(token)
