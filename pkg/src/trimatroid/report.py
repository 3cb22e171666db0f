"""Verification reports: a list of named checks with witnesses.

The structured rendering is tab-delimited, one record per line, and leaves
out timings so two runs with the same inputs produce identical bytes::

    trimatroid-report   1
    command             verify thm1
    param               threshold   3
    check               MK5 t=3: U2,4, F7 or MK5 minor  pass
    note                n=10 rank=4 triangles per element: min=3 max=3
    witness             minor   host=G:5:...  target=MK5  delete=3  contract=  iso=...
    overall             pass    checks=1  pass=1  fail=0  skip=0

``witness`` and ``note`` lines belong to the closest ``check`` above them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

FORMAT_VERSION = "1"
STATUSES = ("pass", "fail", "skip")


def _clean(text: str) -> str:
    return " ".join(str(text).replace("\t", " ").split())


@dataclass
class Witness:
    kind: str                      # minor | restriction | iso | clique | cut | graph
    fields: list[tuple[str, str]]

    def get(self, key: str, default: str | None = None) -> str | None:
        return next((v for k, v in self.fields if k == key), default)

    def line(self) -> str:
        return "\t".join(["witness", self.kind] + [f"{k}={v}" for k, v in self.fields])


@dataclass
class Check:
    name: str
    status: str
    notes: list[str] = field(default_factory=list)
    witnesses: list[Witness] = field(default_factory=list)
    seconds: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerificationReport:
    command: str
    params: list[tuple[str, str]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: VerificationReport):
        self.checks.extend(other.checks)

    def counts(self) -> dict[str, int]:
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    @property
    def status(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def structured(self) -> str:
        out = [f"trimatroid-report\t{FORMAT_VERSION}", f"command\t{_clean(self.command)}"]
        out += [f"param\t{_clean(k)}\t{_clean(v)}" for k, v in self.params]
        for c in self.checks:
            out.append(f"check\t{_clean(c.name)}\t{c.status}")
            out += [f"note\t{_clean(n)}" for n in c.notes]
            out += [w.line() for w in c.witnesses]
        n = self.counts()
        out.append(f"overall\t{self.status}\tchecks={len(self.checks)}\t"
                   f"pass={n['pass']}\tfail={n['fail']}\tskip={n['skip']}")
        return "\n".join(out) + "\n"

    def human(self, verbose: bool = False) -> str:
        width = max((len(c.name) for c in self.checks), default=10)
        out = [f"== {self.command}"]
        if self.params:
            out.append("   " + ", ".join(f"{k}={v}" for k, v in self.params))
        for c in self.checks:
            out.append(f"  [{c.status.upper():4}] {c.name:<{width}}  {c.seconds:7.2f}s")
            for note in c.notes:
                out.append(f"         {note}")
            if verbose:
                for w in c.witnesses:
                    out.append("         witness " + w.kind + " " +
                               " ".join(f"{k}={v}" for k, v in w.fields))
        n = self.counts()
        out.append(f"  overall: {self.status.upper()} ({n['pass']} pass, {n['fail']} fail, "
                   f"{n['skip']} skip)")
        return "\n".join(out) + "\n"


class ReportFormatError(ValueError):
    pass


def parse_report(text: str) -> VerificationReport:
    lines = text.splitlines()
    if not lines or lines[0].split("\t")[0] != "trimatroid-report":
        raise ReportFormatError("missing report header")
    report = VerificationReport("")
    current: Check | None = None
    for no, line in enumerate(lines[1:], 2):
        parts = line.split("\t")
        tag = parts[0]
        if tag == "command":
            report.command = parts[1]
        elif tag == "param":
            report.params.append((parts[1], parts[2]))
        elif tag == "check":
            current = report.add(Check(parts[1], parts[2]))
        elif tag in ("note", "witness"):
            if current is None:
                raise ReportFormatError(f"line {no}: {tag} before any check")
            if tag == "note":
                current.notes.append(parts[1])
            else:
                fields = [tuple(p.split("=", 1)) for p in parts[2:]]
                current.witnesses.append(Witness(parts[1], [(k, v) for k, v in fields]))
        elif tag == "overall":
            if parts[1] != report.status:
                raise ReportFormatError(f"line {no}: overall status disagrees with the checks")
        else:
            raise ReportFormatError(f"line {no}: unknown record {tag!r}")
    return report
