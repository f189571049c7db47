# -*- coding: utf-8 -*-

"""Configuration keys of the toolchain.

Defaults are filled with ``setdefault`` so callers can pre-populate any key;
environment variables override defaults, command-line flags override both.
"""

import os

DEFAULTS = {
    "STATE_LIMIT": 10 ** 7,
    "FEE_PER_TX": 1000,
    "SECRET_PAD": 16,
    "LIQUIDITY_EPSILON": 0,
    "OUTPUT_FORMAT": "json",
    "PARALLEL_REGIONS": 1,
    "DEBUG": False,
}

ENVIRONMENT = {
    "BITML_STATE_LIMIT": ("STATE_LIMIT", int),
    "BITML_DEBUG": ("DEBUG", lambda value: value.lower() in ("1", "true", "yes")),
}


class Config(dict):
    """A dict of upper-case configuration keys"""

    def __init__(self, *args, **kwargs):
        super(Config, self).__init__(*args, **kwargs)
        for key, value in DEFAULTS.items():
            self.setdefault(key, value)

    @classmethod
    def from_env(cls, environ=None, **overrides):
        """Build a configuration from the environment

        :param dict environ: the environment to read (default ``os.environ``)
        :param overrides: keys that win over the environment; ``None`` values are ignored
        :return Config: the configuration
        """
        environ = os.environ if environ is None else environ
        values = {}
        for variable, (key, convert) in ENVIRONMENT.items():
            if environ.get(variable):
                try:
                    values[key] = convert(environ[variable])
                except ValueError:
                    raise ValueError(
                        "{} must be an integer, got {!r}".format(
                            variable, environ[variable]
                        )
                    )
        values.update(
            {key: value for key, value in overrides.items() if value is not None}
        )
        return cls(values)
