"""
Installation self-check
Run this to confirm dependencies, configuration and a few known values
"""
import sys

print("=" * 60)
print("EXPDIOPHANTINE SELF-CHECK")
print("=" * 60)

# 1. Dependencies
print("\n1. Checking Python dependencies...")
try:
    import pydantic
    print(f"   ✅ pydantic: {pydantic.VERSION}")
except ImportError as e:
    print(f"   ❌ pydantic: {e}")
    sys.exit(1)

try:
    import sympy
    print(f"   ✅ sympy: {sympy.__version__}")
except ImportError as e:
    print(f"   ❌ sympy: {e}")
    sys.exit(1)

try:
    import dotenv  # noqa: F401
    print("   ✅ python-dotenv: OK")
except ImportError as e:
    print(f"   ❌ python-dotenv: {e}")
    sys.exit(1)

# 2. Configuration
print("\n2. Checking configuration...")
try:
    from expdiophantine.config import load_settings
    from expdiophantine.errors import ConfigError

    settings = load_settings()
    print(f"   ✅ log level: {settings.log_level}, format: {settings.output_format.value}")
    print(f"   ✅ search bounds: a_max={settings.pow2_a_max}, p_max={settings.odd_p_max}, y_max={settings.xc_y_max}")
except ConfigError as e:
    print(f"   ❌ {e.detail}")
    sys.exit(1)

# 3. Known values
print("\n3. Checking known values...")
try:
    from expdiophantine import classgroup, pell, solvers

    if solvers.theorem41_bound(250).N == 4:
        print("   ✅ bound for C=250: N=4")
    else:
        print("   ❌ bound for C=250 is not 4")
        sys.exit(1)

    if pell.pell_fundamental(10).plus.X == 19:
        print("   ✅ Pell fundamental for D=10: (19, 6)")
    else:
        print("   ❌ Pell fundamental for D=10 is wrong")
        sys.exit(1)

    if classgroup.class_exponent(10)[:2] == (2, 2):
        print("   ✅ class group of disc -40: h=2, exponent=2")
    else:
        print("   ❌ class group of disc -40 is wrong")
        sys.exit(1)
except Exception as e:
    print(f"   ❌ Error: {e}")
    import traceback
    traceback.print_exc()
    sys.exit(1)

print("\n" + "=" * 60)
print("✅ ALL CHECKS PASSED!")
print("=" * 60)
print("\nRun the command line with:")
print("  ./run_cli.sh bound --c 250")
