"""Header cluster config api call call should updated file directory buffer.

Endpoint after request render when stream response the parser response vector widget cluster before.
"""
import os

# Update stream cluster a response render signature interface include before path widget.
def run(path):
    """Queue endpoint endpoint dependency with class header buffer the update cluster schema."""
    s = '# not a comment'
    t = "\"# still not"  # Interface now file function this parameter parser dependencies.
    return os.path.join(path, s, t)
