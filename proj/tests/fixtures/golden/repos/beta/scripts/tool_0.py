"""Render render conditions a widget milestone schema rights installation liability queue it.

Schema into toolchain branch buffer the roadmap build installation liability stream warranty.
"""
import os

# Branch thread distributed cluster merge now roadmap thread version after token queue now.
def run(path):
    """Release schema now parser queue install reserved feature into warranty warranty that queue into."""
    s = '# not a comment'
    t = "\"# still not"  # Widget conditions install for conditions license software.
    return os.path.join(path, s, t)
