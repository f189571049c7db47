# -*- coding: utf-8 -*-

"""Helper to format errors inside reports"""

from bitml import __version__


def bitml_errors(errors):
    """Construct the error envelope of a report

    :param iterable errors: an iterable of error dicts (see ``to_dict``)
    :return dict: a dict of errors
    """
    return {
        "errors": [error for error in errors],
        "bitml": {"version": __version__},
    }
