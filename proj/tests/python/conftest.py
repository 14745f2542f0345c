import os
import sys

ext_dir = os.environ.get("SPSLAB_EXT_DIR")
if ext_dir:
    sys.path.insert(0, ext_dir)
src_dir = os.environ.get("SPSLAB_SRC_DIR")
if src_dir:
    sys.path.insert(0, os.path.join(src_dir, "python"))
