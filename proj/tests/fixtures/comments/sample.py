#!/usr/bin/env python3
# Module comment
"""Module docstring.

Second paragraph.
"""
import os  # import os

A = "# not a comment"
B = '# single quoted'
C = """# triple quoted data, not a docstring"""
D = r"raw \" # still raw"
E = f"{A!r} # f-string"
F = b"# bytes"


def func(x):
    """Function docstring."""
    y = x  # assign
    return y


class Widget:
    '''Class docstring
        indented continuation
    '''

    # method comment
    def method(self):
        s = "a" \
            "# continued string"
        return s  # return

    def other(self): """Same-line docstring."""


def no_doc():
    x = """not a docstring"""
    return x
# after function
    # indented comment
#
##   double hash
def spaced():

    """Docstring after blank line."""
    pass
value = {"k": "# in dict"}  # dict comment
# one
# two
# three
# four
# five
z = 1  # six
