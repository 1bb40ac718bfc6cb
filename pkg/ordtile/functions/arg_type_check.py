# Argument type checking for public entry points.

import inspect

from ordtile.datatypes.errors import InputError


def method_arg_type_check(method_obj, exclude=()):
    """
    Checks that the arguments the caller of this function received abide by the
    annotations of `method_obj`. If there is a discrepancy, raises an InputError.

    Must be called from inside `method_obj` itself, since the values are read from
    the calling frame. Annotations that are not plain classes (``Optional[...]``,
    strings, ``inspect.Parameter.empty``) are skipped.

    Parameters
    ----------
    method_obj : callable
        The function or bound method whose signature holds the expected types.
    exclude : iterable of str
        Argument names to leave unchecked. 'self' is always excluded.
    """
    skipped = set(exclude) | {'self'}

    frame = inspect.currentframe().f_back
    try:
        passed = frame.f_locals
        for param in inspect.signature(method_obj).parameters.values():
            if param.name in skipped or param.name not in passed:
                continue
            expected = param.annotation
            if not isinstance(expected, type) or expected is inspect.Parameter.empty:
                continue
            value = passed[param.name]
            if value is None and param.default is None:
                continue
            if expected is int and isinstance(value, bool):
                raise InputError(f"{param.name} should be of type int, but got type bool instead.")
            if not isinstance(value, expected):
                raise InputError(f"{param.name} should be of type {expected.__name__}, "
                                 f"but got type {type(value).__name__} instead.")
    finally:
        del frame
