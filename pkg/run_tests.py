#!/usr/bin/env python3
"""
Test Runner

Runs the test suite, optionally one module or with coverage.
"""

import os
import subprocess
import sys
from pathlib import Path

MODULES = ["polyring", "recurrence", "somos", "conditions", "painleve", "config",
           "parser", "reporter", "validator", "orchestrator_pipeline", "cli"]


def check_dependencies():
    """Check if required test dependencies are installed"""
    try:
        import hypothesis  # noqa: F401
        import pytest  # noqa: F401
        return True
    except ImportError:
        print("❌ pytest/hypothesis not installed")
        print("\nInstall test dependencies:")
        print("  pip install -r requirements.txt")
        return False


def _pytest_cmd():
    venv_pytest = os.path.join(os.path.dirname(sys.executable), "pytest")
    return venv_pytest if os.path.exists(venv_pytest) else "pytest"


def run_tests(verbose=True, coverage=False, fast=False):
    """
    Run all tests

    Args:
        verbose: Show detailed output
        coverage: Generate coverage report
        fast: Skip tests marked slow
    """
    project_root = Path(__file__).parent
    cmd = [_pytest_cmd()]
    if verbose:
        cmd.append("-v")
    if coverage:
        cmd.extend(["--cov=src", "--cov-report=term-missing"])
    if fast:
        cmd.extend(["-m", "not slow"])
    cmd.append("tests/")

    print("=" * 60)
    print("Running Painleve Bilinear Tests")
    print("=" * 60)
    print()

    return subprocess.run(cmd, cwd=project_root).returncode


def run_specific_module(module_name):
    """
    Run tests for a specific module

    Args:
        module_name: one of MODULES
    """
    test_file = f"tests/test_{module_name}.py"
    print(f"Running tests for {module_name}...")
    return subprocess.run([_pytest_cmd(), "-v", test_file], cwd=Path(__file__).parent).returncode


def main():
    """Main test runner"""
    if not check_dependencies():
        return 1

    if len(sys.argv) > 1:
        arg = sys.argv[1]
        if arg == "--coverage":
            return run_tests(verbose=True, coverage=True)
        if arg == "--fast":
            return run_tests(verbose=True, fast=True)
        if arg in MODULES:
            return run_specific_module(arg)
        if arg == "--help":
            print("Usage:")
            print("  python run_tests.py              Run all tests")
            print("  python run_tests.py --coverage   Run with coverage report")
            print("  python run_tests.py --fast       Skip slow tests")
            print(f"  python run_tests.py MODULE       One of: {', '.join(MODULES)}")
            return 0
        print(f"Unknown option: {arg}")
        print("Use --help for usage information")
        return 1

    return run_tests(verbose=True, coverage=False)


if __name__ == "__main__":
    sys.exit(main())
