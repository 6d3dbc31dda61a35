# ----------------------------------------------------------
# Domination Lab
# File: tests/test_help_decorator.py
# ----------------------------------------------------------
# Description:
# Unit tests for domlab/help_decorator.py implementing the
# Decorator Design Pattern for the CLI help epilog.
#
# Covers:
#   • HelpBase subcommand listing
#   • HelpDecorator pass-through and chaining
#   • RegistryHelp sections read at render time
#   • build_epilog with families, claims and stretch claims
# ----------------------------------------------------------

import pytest

from domlab.help_decorator import HelpBase, HelpDecorator, RegistryHelp, build_epilog


@pytest.fixture
def base_help():
    return HelpBase()


# ----------------------------------------------------------
# HelpBase and HelpDecorator
# ----------------------------------------------------------
def test_help_base_lists_subcommands(base_help):
    text = base_help.show_help()
    assert text.startswith("Subcommands:")
    for command in ("build", "analyze", "solve", "verify", "scan"):
        assert f"\n  {command}" in text


def test_help_decorator_passes_through(base_help):
    assert HelpDecorator(base_help).show_help() == base_help.show_help()


# ----------------------------------------------------------
# RegistryHelp
# ----------------------------------------------------------
def test_registry_help_appends_section(base_help):
    text = RegistryHelp(base_help, "Families", lambda: ["A", "B"]).show_help()
    assert text.startswith(base_help.show_help())
    assert text.endswith("\n\nFamilies:\n  A, B")


def test_registry_help_reads_source_at_render_time(base_help):
    names = ["R"]
    helper = RegistryHelp(base_help, "Families", lambda: names)
    names.append("L")
    assert "R, L" in helper.show_help()


def test_registry_help_chaining_and_wrapping(base_help):
    long_names = [f"claim{i:03d}" for i in range(40)]
    helper = RegistryHelp(RegistryHelp(base_help, "One", lambda: ["x"]), "Two", lambda: long_names)
    text = helper.show_help()
    assert text.index("One:") < text.index("Two:")
    assert all(len(line) <= 76 for line in text.splitlines())


def test_registry_help_with_empty_base():
    class EmptyBase:
        def show_help(self):
            return ""
    assert RegistryHelp(EmptyBase(), "Claims", lambda: ["GP72"]).show_help() == "\n\nClaims:\n  GP72"


# ----------------------------------------------------------
# build_epilog
# ----------------------------------------------------------
def test_build_epilog_sections():
    text = build_epilog()
    assert "Families:" in text
    assert "Claims:" in text
    assert "Stretch claims:" in text
    stretch = text.split("Stretch claims:")[1]
    assert "R.k3.exact" in stretch
    claims_section = text.split("Claims:")[1].split("Stretch claims:")[0]
    assert "GP72" in claims_section
    assert "R.k3.exact" not in claims_section
