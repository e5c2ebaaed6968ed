"""Transcribed fixtures and their replay."""

from .fixtures import FixtureSet, load_fixtures
from .replay import PaperReplay, ReplayCheck, ReplayReport, replay_w10, replay_w8_and_final

__all__ = ['FixtureSet', 'load_fixtures', 'PaperReplay', 'ReplayCheck', 'ReplayReport',
           'replay_w10', 'replay_w8_and_final']
