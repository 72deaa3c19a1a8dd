"""Utility decorators."""

import inspect
from collections.abc import Callable
from functools import wraps
from typing import Any


def handle_file_errors(role: str, mode: str = "write") -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Decorator factory re-raising file I/O errors with the file's role and path.

    Parameters
    ----------
    role : str
        What the file holds, used in messages (e.g. ``"report"``).
    mode : {'write', 'read'}, default 'write'
        The operation the wrapped function performs.

    The path is taken from the wrapped function's ``path`` parameter when it
    has one (e.g. ``write_report(report, path)``), otherwise from its first
    parameter.
    """
    if mode not in ("write", "read"):
        raise ValueError(f"mode must be 'write' or 'read', got {mode!r}")

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        sig = inspect.signature(func)
        params = list(sig.parameters)
        path_param = "path" if "path" in params else params[0]

        def _path_value(a: tuple, kw: dict[str, Any]) -> Any:
            try:
                return sig.bind(*a, **kw).arguments[path_param]
            except (TypeError, KeyError):
                return kw.get(path_param, "?")

        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except FileNotFoundError as exc:
                path = _path_value(args, kwargs)
                raise FileNotFoundError(
                    f"{role.capitalize()} file not found: {path}"
                ) from exc
            except PermissionError as exc:
                path = _path_value(args, kwargs)
                raise PermissionError(
                    f"Permission denied: cannot {mode} {role} '{path}'"
                ) from exc
            except OSError as exc:
                path = _path_value(args, kwargs)
                raise OSError(
                    f"Cannot {mode} {role} '{path}': {exc.strerror or exc}"
                ) from exc
        return wrapper

    return decorator
