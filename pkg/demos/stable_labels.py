"""Labels that never change make identical particles distinguishable again.

Fold the label into the cell: a coin with faces H/T and a colour r/g has
four composite cells.  Among the Bose-Einstein states over those cells,
only the ones where each colour appears once are reachable, and there are
exactly C^N of them.

Run: python3 demos/stable_labels.py
"""
from permstat import LabeledSystem, count_arrangements, stable_label_reduction

for base, labels in ((2, 2), (3, 2), (2, 3), (4, 3)):
    r = stable_label_reduction(LabeledSystem(base, labels))
    print(f"C={base} N={labels}: composite cells={r.composite_cells:<3} all states={r.reduced_count:<4}"
          f" reachable={r.accessible_count:<4} C^N={count_arrangements(base, labels, 'distinguishable')}")
