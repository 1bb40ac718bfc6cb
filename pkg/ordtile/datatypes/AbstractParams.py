from ordtile.datatypes.errors import InputError


class AbstractParams:
    # This class stores the tunable limits used by one search component.
    # Subclasses declare a `defaults` dict; keyword arguments override single entries.
    # Instances are read-only after construction.

    defaults = {}

    def __init__(self, **kwargs):
        values = dict(self.defaults)
        for name, value in kwargs.items():
            if name not in values:
                raise InputError(f"{type(self).__name__} has no parameter {name!r}; "
                                 f"known: {sorted(values)}")
            values[name] = value
        self._check(values)
        object.__setattr__(self, '_values', values)

    def __getattr__(self, name):
        values = self.__dict__.get('_values', {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is read-only; use replace()")

    def __repr__(self):
        args = ', '.join(f"{k}={v!r}" for k, v in sorted(self._values.items()))
        return f"{type(self).__name__}({args})"

    def __eq__(self, other):
        return type(self) is type(other) and self._values == other._values

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self._values.items()))))

    def _check(self, values):
        # Validates the merged values; the default accepts positive integers only.
        for name, value in values.items():
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InputError(f"{name} must be a non-negative integer, got {value!r}")

    def to_dict(self):
        # Returns a plain copy of the current values
        return dict(self._values)

    def replace(self, **kwargs):
        # Returns a new instance with some values overridden
        merged = self.to_dict()
        merged.update(kwargs)
        return type(self)(**merged)


class ParamsCore(AbstractParams):
    """
    Limits for the ordered-graph primitives.

    Attributes
    ----------
    h_limit : int
        Largest pattern size accepted by colouring and copy enumeration.
    """

    defaults = {"h_limit": 63}
