"""Machine-readable registry of known inconsistencies in the published material.

Each entry pins two values: ``expected`` is what the published claim
asserts, ``actual`` is what evaluation reproducibly gives (the definition
for a mistyped table entry, the printed expression for a wrong formula).
``egfbern verify`` recomputes ``actual`` and fails if it drifts, so the
registry doubles as a regression test.  DISCREPANCIES.md
documents the same ids in prose.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Discrepancy:
    id: str
    title: str
    expected: str
    actual: str


def _d(id, title, expected, actual):
    return Discrepancy(id, title, expected, actual)


REGISTRY = {d.id: d for d in (
    _d("D01-recursion-sign",
       "Bernoulli recursion printed without its minus sign; B_1 for exp (table vs recursion)",
       "-1/2", "1/2"),
    _d("D02-sfac2-n0",
       "B_{1,0}^S printed as -1; the definition forces 1/f_1 = 1",
       "-1", "1"),
    _d("D03-sfac2-n3",
       "B_{1,3}^S printed as 1/48; the printed polynomial B_{1,3}^S(x) has constant -1/48",
       "1/48", "-1/48"),
    _d("D04-zeta2-table",
       "B_{1,n}^{Z^2} table disagrees with the definition for n >= 2",
       "11/432 1/144 -217/324000 -157/64800 -21503/16669800",
       "-5/864 1/2304 13709/15552000 4669/8294400 62582129/307257753600"),
    _d("D05-zrising3-n1",
       "B_{3,1}^{Z^(3)} printed as -15/12; the definition gives -15/2",
       "-15/12", "-15/2"),
    _d("D06-zeta-closed-form-sign",
       "Zeta composition sum printed with a global (-1)^n; definition vs printed sum at N=1, M=2, n=2",
       "-5/864", "59/864"),
    _d("D07-trig-parity-sign",
       "Sine/cosine parity weight (-1)^(n+k(L+1)); definition vs printed sum at L=1, n=2 (sin, cos)",
       "-11/350 -1/10", "31/350 7/30"),
    _d("D08-comp-exp2-n6",
       "C_{2,6} printed as -655/53; series reversion gives -655/63",
       "-655/53", "-655/63"),
    _d("D09-comp-poly-table",
       "Printed C_{1,n}(x) rows for n >= 2 disagree with (1+y)^x; rows n = 2..7",
       "rows 2..7 of the printed list", "falling factorials x(x-1)...(x-n+1)"),
    _d("D10-chain-sum-comp",
       "Chain-sum expression for C_{2,n}^exp at n = 3, 4 (definition: 5/6, -68/45)",
       "5/6 -68/45", "-1/2 2/45"),
    _d("D11-inverse-chain-sum",
       "Alternating Par_d^2 chain sum for (x + x^2/2)^{<-1>} at n = 3 (reversion: 3)",
       "3", "0"),
    _d("D12-iterate-top-block",
       "|pi_d| >= 2 in Par_d^1 drops the one-block term of F o F; exp-1, d=1, n=4 (Bell: 15)",
       "15", "14"),
    _d("D13-par-count-formula",
       "Par_d^s count formula keeps only 1/l(a_d)!; formula vs enumeration at n=2, d=2, s=1",
       "2", "1"),
)}
