"""Check reports: per-axiom pass/fail/skip with a witness for failures.

Axiom identifiers are short stable strings ("B2-membership", "A1", "ANT2",
"BC2b", ...) so reports can be compared across runs and across the three
equivalent axiom systems.  A report is deterministic for identical inputs;
wall-clock timing is kept separate from the deterministic payload.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckItem:
    axiom: str
    status: str                 # "pass" | "fail" | "skip"
    witness: dict | None = None
    instances: int = 0
    skipped: int = 0
    note: str = ""

    @property
    def ok(self):
        return self.status != "fail"


@dataclass
class Report:
    name: str
    items: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    timing_ms: int = 0

    @property
    def ok(self):
        return all(it.ok for it in self.items)

    @property
    def status(self):
        return "pass" if self.ok else "fail"

    def item(self, axiom):
        for it in self.items:
            if it.axiom == axiom:
                return it
        raise KeyError(axiom)

    def axioms(self):
        return [it.axiom for it in self.items]

    def failures(self):
        return [it for it in self.items if not it.ok]

    def extend(self, other, prefix=""):
        """Absorb another report's items, optionally prefixing axiom names."""
        for it in other.items:
            axiom = prefix + it.axiom if prefix else it.axiom
            self.items.append(CheckItem(axiom, it.status, it.witness,
                                        it.instances, it.skipped, it.note))
        return self

    def summary(self):
        bad = self.failures()
        if not bad:
            return "%s: all %d checks pass" % (self.name, len(self.items))
        return "%s: %d of %d checks fail (%s)" % (
            self.name, len(bad), len(self.items),
            ", ".join(it.axiom for it in bad))


class Checker:
    """Accumulates per-axiom results; keeps only the first witness."""

    def __init__(self, name):
        self.report = Report(name)

    def run(self, axiom, instances, note=""):
        """Record an axiom checked over an iterable of instance results.

        `instances` yields (ok, witness_or_None) pairs, or the sentinel
        string "skip" for instances that cannot be evaluated (graded
        truncation).  Evaluation stops lazily after the first failure is
        found, but all instances are consumed so counts stay exact.
        """
        count = 0
        skipped = 0
        first_witness = None
        failed = False
        for res in instances:
            if res == "skip":
                skipped += 1
                continue
            ok, witness = res
            count += 1
            if not ok and not failed:
                failed = True
                first_witness = witness
        if count == 0 and skipped > 0:
            status = "skip"
        elif failed:
            status = "fail"
        else:
            status = "pass"
        self.report.items.append(
            CheckItem(axiom, status, first_witness, count, skipped, note))
        return not failed

    def record(self, axiom, ok, witness=None, instances=1, skipped=0, note=""):
        status = "pass" if ok else "fail"
        self.report.items.append(
            CheckItem(axiom, status, None if ok else witness,
                      instances, skipped, note))
        return ok

    def skip(self, axiom, note=""):
        self.report.items.append(CheckItem(axiom, "skip", None, 0, 0, note))

    def done(self):
        return self.report


def witness(indices, residual=None, field=None, detail=""):
    """Standard witness payload: basis indices plus a residual vector."""
    w = {"indices": list(indices)}
    if residual is not None:
        if field is not None:
            if isinstance(residual, dict):
                w["residual"] = {str(k): field.to_str(v)
                                 for k, v in sorted(residual.items())}
            else:
                w["residual"] = [field.to_str(v) for v in residual]
        else:
            w["residual"] = residual
    if detail:
        w["detail"] = detail
    return w
