"""Pins the pytest rootdir so `import oracles` resolves from tests/."""
