"""Inside one augmentation step, and what the final certificate says.

Starting from a deliberately weak rainbow set, this walks the solver's
loop by hand: relabel the picked colors first, build the level sequence,
find the alternating path that the first break point yields, and apply
it.  When no break point remains, the completed level sequence is the
certificate: with deficiency delta = n - t it shows t >= delta^2, which
rearranges to t > n - sqrt(n).

Run: python3 demos/03_certificate_walkthrough.py
"""

from rainbowmat import RainbowSet, latin_to_family, shuffled_latin
from rainbowmat.solver import apply_cap, build_aux, find_cap, relabel


def main():
    n = 6
    fam = latin_to_family(shuffled_latin(n, seed=0))
    # a weak start: only three colors, first mutually compatible cells
    picks, elems = {}, set()
    for color in (0, 1, 2):
        for cell in sorted(fam.sets[color]):
            if fam.matroid_m.independent(elems | {cell}) \
                    and fam.matroid_n.independent(elems | {cell}):
                picks[color] = cell
                elems.add(cell)
                break
    rainbow = RainbowSet.from_dict(picks)
    print(f"order-{n} Latin square, starting from {rainbow.size} picks\n")

    step = 0
    while rainbow.size < n:
        rel = relabel(rainbow, fam)
        res = build_aux(rel.rainbow, rel.family)
        if res.complete:
            break
        step += 1
        print(f"step {step}: t={rel.rainbow.size}, "
              f"deficiency delta={res.aux.delta}")
        for i, lev in enumerate(res.aux.levels, 1):
            print(f"  level {i}: |A_{i}|={len(lev.a_set)} "
                  f"removed={sorted(lev.removed)}")
        print(f"  -> break at level {res.break_level}: element "
              f"{res.break_element} is unspanned by the rainbow set in M")
        cap = find_cap(rel.rainbow, rel.family, res.aux,
                       res.break_level, res.break_element, check_claims=True)
        print(f"  alternating path: add {cap.b}, remove {cap.r} "
              f"(length {cap.length})")
        new_rel = apply_cap(rel.rainbow, rel.family, cap)
        rainbow = RainbowSet.from_dict(
            {rel.order[c]: e for c, e in new_rel.picks})

    t = rainbow.size
    if t == n:
        print(f"\nreached a full rainbow set: t = n = {n}")
    else:
        delta = n - t
        print(f"\nno break point left: the level sequence certifies "
              f"t={t} >= delta^2={delta ** 2}")


if __name__ == "__main__":
    main()
