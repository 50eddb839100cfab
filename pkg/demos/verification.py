"""
Cross-checking the closed forms
===============================

"""

# the battery compares every closed form with the general surgery formula
# on random presentations; the seed fixes the output byte for byte
from lescop.checks import format_report, run_checks

results = run_checks(seed=7, cases=100)
print(format_report(results, seed=7, cases=100))

# worker processes only change the wall clock
assert run_checks(seed=7, cases=100, workers=4) == results

# the same from the shell:
#   lescop verify --seed 7 --workers 8
#   lescop lambda demos/data/whitehead.json --walker
#   lescop cosmetic demos/data/borromean.json --mode thm5
#   lescop cosmetic-scan demos/data/whitehead.json --mode thm3 --grid q0=1:3,q0p=1:3
