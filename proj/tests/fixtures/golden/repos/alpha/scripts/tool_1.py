"""Thread cache vector stream socket loader callback dependencies interface interface.

Interface for matrix matrix a directory updated thread that matrix api cluster overload this.
"""
import os

# Api the request module it return widget socket call when interface for widget when request.
def run(path):
    """Path endpoint file thread thread interface a module file folder request."""
    s = '# not a comment'
    t = "\"# still not"  # Updated we function files loader that dependency loader.
    return os.path.join(path, s, t)
