"""Turn a dataclass config into command-line flags."""
import argparse
import dataclasses


def parse_config(cls, argv=None, description=None):
    ap = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return cls(**vars(ap.parse_args(argv)))
