import os
import sys

import pyequipart.config


def set_cache_folder(cf_user=None):
    """
    This function set a default cache folder that stores the exhaustive enumerations
    computed by pyequipart. It populates the pyequipart.config.cache_folder variable (str).
    """
    from pyequipart import __version__ as version

    cf_home = os.path.expanduser("~")
    name = "pyequipart-{}-{}".format(version, sys.implementation.cache_tag)

    if cf_user is not None:  # user provide an explicit path
        cache_folder = os.path.expanduser(cf_user)
    elif os.path.isdir(cf_home):  # home is accessible
        cache_folder = os.path.join(cf_home, ".cache", name)
    else:
        import tempfile

        cache_folder = tempfile.mkdtemp(prefix=name)

    cache_folder = os.path.realpath(cache_folder)
    os.makedirs(cache_folder, exist_ok=True)
    pyequipart.config.cache_folder = cache_folder
    return cache_folder


def clean_pyequipart(path=""):
    if path == "":
        path = pyequipart.config.cache_folder or set_cache_folder()

    print("Cleaning " + path + "...")

    for f in os.scandir(path):
        if f.is_file() and f.name.endswith(".json"):
            os.remove(f.path)
            print("    - " + f.path + " has been removed.")
