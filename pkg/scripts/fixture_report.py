"""Print every bundled fixture with its invariants and expected facts."""

from serrekit.betti import hochster_betti
from serrekit.complex import complex_h_vector, f_vector
from serrekit.fixtures import FIXTURES
from serrekit.serre import serre_report
from serrekit.verify import verify_fixtures


def main():
    ok = True
    for rep in verify_fixtures():
        c = FIXTURES[rep.name].complex
        print(f"== {rep.name}: n={c.n} dim={c.dim} facets={len(c.facet_masks)}")
        print(f"   f={list(f_vector(c))} h={list(complex_h_vector(c))}")
        for p in (2, 3):
            s = serre_report(c, p)
            w = f"{list(s.witness.face)}/{s.witness.i}" if s.witness else "-"
            print(f"   p={p}: level={s.serre_level} depth={s.depth} cm={s.is_cm} witness={w}")
        if c.ground_size <= 12:
            print("\n".join("   " + line for line in hochster_betti(c, 2).render().splitlines()))
        for f in rep.facts:
            mark = "ok " if f["passed"] else "BAD"
            arg = f" arg={f['arg']}" if f["arg"] is not None else ""
            p = f" p={f['p']}" if f["p"] else ""
            print(f"   {mark} {f['key']}{arg}{p} {f['op']} {f['expected']} "
                  f"(got {f['actual']}, {f['provenance']})")
        ok &= rep.passed
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
