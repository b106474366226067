from domain.shared import ValueObject


class ValidationResult(ValueObject):
    """Verdict of one invariant check"""

    def __init__(self, name: str, passed: bool, detail: str = ""):
        self._name = name
        self._passed = bool(passed)
        self._detail = detail

    @property
    def name(self) -> str:
        return self._name

    @property
    def passed(self) -> bool:
        return self._passed

    @property
    def detail(self) -> str:
        return self._detail

    @property
    def verdict(self) -> str:
        return "PASS" if self._passed else "FAIL"

    def _equality_components(self) -> tuple:
        return (self._name, self._passed, self._detail)
