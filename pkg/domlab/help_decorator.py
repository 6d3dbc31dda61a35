# ----------------------------------------------------------
# Domination Lab
# File: domlab/help_decorator.py
# ----------------------------------------------------------
# Description:
# Decorator Design Pattern for the CLI help epilog.
#
# The base help lists the subcommands; decorators append the
# registered families and claim ids read from their registries, so
# newly registered entries appear without editing the CLI.
# ----------------------------------------------------------

import textwrap
from typing import Callable, List

from domlab.claims import list_claims
from domlab.families import list_families


class HelpBase:
    """Base class defining the structure of the help system."""

    def show_help(self) -> str:
        return (
            "Subcommands:\n"
            "  build    build a gadget or family and write graph6 or DOT\n"
            "  analyze  structural checks: cubic, bridges, kappa, cyc4, hamilton\n"
            "  solve    exact domination number, optionally certified\n"
            "  verify   run the claim registry and write a report\n"
            "  scan     check a graph6 corpus against a domination bound"
        )


class HelpDecorator(HelpBase):
    """Wraps another help object."""

    def __init__(self, base_help: HelpBase):
        self._base_help = base_help

    def show_help(self) -> str:
        return self._base_help.show_help()


class RegistryHelp(HelpDecorator):
    """Appends a titled, wrapped list read from a registry at render time."""

    def __init__(self, base_help: HelpBase, title: str, source: Callable[[], List[str]]):
        super().__init__(base_help)
        self.title = title
        self.source = source

    def show_help(self) -> str:
        names = ", ".join(self.source())
        body = textwrap.fill(names, width=76, initial_indent="  ", subsequent_indent="  ")
        return f"{super().show_help()}\n\n{self.title}:\n{body}"


def build_epilog() -> str:
    """Help epilog with the current families and claim ids."""
    helper = RegistryHelp(HelpBase(), "Families", list_families)
    helper = RegistryHelp(helper, "Claims", list_claims)
    helper = RegistryHelp(helper, "Stretch claims",
                          lambda: [c for c in list_claims(include_stretch=True)
                                   if c not in list_claims()])
    return helper.show_help()
