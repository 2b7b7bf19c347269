# Keeps the tests directory on sys.path so tests can import oracles.py.
