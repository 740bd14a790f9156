"""
Checking identities with the expression harness
================================================

Identities are written as text, parsed to trees, and evaluated on both
sides at the working precision and again with 20 more guard digits.
"""

import tempfile
from pathlib import Path

from multisine.harness.evaluator import evaluate
from multisine.harness.expr import parse, to_text
from multisine.harness.registry import IdentitySpec, builtin_registry, load_identity_file
from multisine.harness.verify import verify, verify_all

# Parsing: ^ is right-associative and binds tighter than unary minus.
for text in ("2^3^2", "-2^2", "1/3 + 1/6"):
    print(f"{text:<10} -> {to_text(parse(text)):<24} = {evaluate(text, 20)}")

# A free variable can be bound at evaluation time.
print("duplication residual at x = 0.3:",
      evaluate("S3(2*x) - S3(x)^4*C3(x)^4", 40, env={"x": "0.3"}))

# The built-in registry, minus the slow extrapolated entries.
specs = [s for s in builtin_registry() if "extrapolated" not in s.tags]
for report in verify_all(specs, 40):
    print(report.line())

# A near miss, and a domain error.
print(verify(IdentitySpec.from_text("pi_approx", "pi", "22/7", required_digits=6), 20).line())
print(verify(IdentitySpec.from_text("outside", "S2(1.5)", "1"), 20).line())

# Identity files use the same expression language.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "mine.ids"
    path.write_text("# user identities\n"
                    "identity clausen_quarter: cl2(pi/2) == catalan\n"
                    "identity eta2: eta(2) == pi^2/12 digits=30\n", encoding="utf-8")
    for report in verify_all(load_identity_file(path), 40):
        print(report.line())
