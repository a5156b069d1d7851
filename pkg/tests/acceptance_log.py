"""Collects per-criterion results so the terminal summary can print them."""
RESULTS: dict = {}


def record(number: int, name: str, passed: bool, detail: str = "") -> bool:
    RESULTS.setdefault(number, []).append((name, bool(passed), detail))
    print(f"criterion {number} / {name}: {'PASS' if passed else 'FAIL'} {detail}")
    return passed
