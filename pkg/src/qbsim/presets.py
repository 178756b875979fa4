"""Figure presets F2a..F11c: the exact parameter sets behind each reference panel."""

import math

from .errors import UnknownFigure
from .model import ModelParams
from .sweep import EvalMode, Metric, SweepAxis, SweepConfig

_PI = math.pi

# (delta, gamma) per panel letter, AFM sign convention; FM flips delta's sign.
_PANELS_AFM = {"a": (0.0, 0.0), "b": (0.0, 0.5), "c": (0.5, 0.0), "d": (0.5, 0.5)}
_PANEL_NAMES = {"a": "XX", "b": "XY", "c": "XXZ", "d": "XYZ"}

_XYZ_AFM = dict(j=1.0, gamma=0.5, delta=0.5, gz=0.0, theta=_PI / 2, omega=1.0)
_TEMPS = {"a": 0.01, "b": 0.1, "c": 1.0}
_DZ_STOP = {"a": 5.0, "b": 50.0, "c": 400.0}


def _axis_time(steps=101):
    return SweepAxis("omega_t", 0.0, 2 * _PI, steps)


def _density(base, axis2, mode=EvalMode.NUMERIC):
    return SweepConfig(base=base, axis1=_axis_time(), axis2=axis2,
                       metric=Metric.ERGOTROPY, mode=mode)


def _build():
    presets = {}
    for letter, (delta, gamma) in _PANELS_AFM.items():
        name = _PANEL_NAMES[letter]
        # F2: AFM ergotropy vs (omega_t, theta) at T = 0.1
        presets[f"f2{letter}"] = (
            lambda d=delta, g=gamma: _density(
                ModelParams(j=1.0, gamma=g, delta=d, temperature=0.1),
                SweepAxis("theta", 0.0, _PI / 2, 101)),
            f"AFM {name}: ergotropy vs omega_t x theta (J=1, delta={delta}, gamma={gamma}, T=0.1)",
        )
        # F3: FM counterpart (J = -1, delta <= 0)
        presets[f"f3{letter}"] = (
            lambda d=-delta, g=gamma: _density(
                ModelParams(j=-1.0, gamma=g, delta=d, temperature=0.1),
                SweepAxis("theta", 0.0, _PI / 2, 101)),
            f"FM {name}: ergotropy vs omega_t x theta (J=-1, delta={-delta}, gamma={gamma}, T=0.1)",
        )
        # F4: AFM ergotropy vs (omega_t, T) at theta = 0
        presets[f"f4{letter}"] = (
            lambda d=delta, g=gamma: _density(
                ModelParams(j=1.0, gamma=g, delta=d, theta=0.0),
                SweepAxis("temperature", 0.01, 2.5, 101)),
            f"AFM {name}: ergotropy vs omega_t x T (J=1, delta={delta}, gamma={gamma}, theta=0)",
        )
        # F5: FM ergotropy vs (omega_t, T) at theta = pi/4
        presets[f"f5{letter}"] = (
            lambda d=-delta, g=gamma: _density(
                ModelParams(j=-1.0, gamma=g, delta=d, theta=_PI / 4),
                SweepAxis("temperature", 0.01, 2.5, 101)),
            f"FM {name}: ergotropy vs omega_t x T (J=-1, delta={-delta}, gamma={gamma}, theta=pi/4)",
        )
        # F6: AFM ergotropy vs (omega_t, G_z); as-published arithmetic
        presets[f"f6{letter}"] = (
            lambda d=delta, g=gamma: _density(
                ModelParams(j=1.0, gamma=g, delta=d, theta=_PI / 2, temperature=0.1),
                SweepAxis("gz", 0.0, 30.0, 101), mode=EvalMode.AS_PUBLISHED),
            f"AFM {name}: ergotropy vs omega_t x G_z (T=0.1, theta=pi/2, D_z=0, as published)",
        )
        # F7: AFM ergotropy vs (omega_t, D_z); as-published arithmetic
        presets[f"f7{letter}"] = (
            lambda d=delta, g=gamma: _density(
                ModelParams(j=1.0, gamma=g, delta=d, theta=_PI / 2, temperature=0.1),
                SweepAxis("dz", 0.0, 50.0, 101), mode=EvalMode.AS_PUBLISHED),
            f"AFM {name}: ergotropy vs omega_t x D_z (T=0.1, theta=pi/2, G_z=0, as published)",
        )
        # F8: FM ergotropy vs (omega_t, D_z)
        presets[f"f8{letter}"] = (
            lambda d=-delta, g=gamma: _density(
                ModelParams(j=-1.0, gamma=g, delta=d, theta=_PI / 4, temperature=0.1),
                SweepAxis("dz", 0.0, 50.0, 101), mode=EvalMode.AS_PUBLISHED),
            f"FM {name}: ergotropy vs omega_t x D_z (T=0.1, theta=pi/4, G_z=0, as published)",
        )
    for letter, temp in _TEMPS.items():
        stop = _DZ_STOP[letter]
        # F9: max ergotropy vs D_z, XYZ AFM
        presets[f"f9{letter}"] = (
            lambda t=temp, s=stop: SweepConfig(
                base=ModelParams(temperature=t, **_XYZ_AFM),
                axis1=SweepAxis("dz", 0.0, s, 400),
                metric=Metric.ERGOTROPY_MAX, time_window=(0.0, _PI),
                mode=EvalMode.AS_PUBLISHED),
            f"XYZ AFM: max ergotropy vs D_z (T={temp}, G_z=0, theta=pi/2, as published)",
        )
        # F10: capacity vs D_z, same parameters
        presets[f"f10{letter}"] = (
            lambda t=temp, s=stop: SweepConfig(
                base=ModelParams(temperature=t, **_XYZ_AFM),
                axis1=SweepAxis("dz", 0.0, s, 400),
                metric=Metric.CAPACITY, mode=EvalMode.AS_PUBLISHED),
            f"XYZ AFM: capacity vs D_z (T={temp}, G_z=0, theta=pi/2, as published)",
        )
        # F11: max l1 coherence vs (D_z, G_z)
        presets[f"f11{letter}"] = (
            lambda t=temp, s=stop: SweepConfig(
                base=ModelParams(temperature=t, **_XYZ_AFM),
                axis1=SweepAxis("dz", 0.0, s, 101),
                axis2=SweepAxis("gz", 0.0, s, 101),
                metric=Metric.COHERENCE_MAX, time_window=(0.0, _PI),
                mode=EvalMode.AS_PUBLISHED),
            f"XYZ AFM: max coherence vs D_z x G_z (T={temp}, theta=pi/2, as published)",
        )
    return presets


_PRESETS = _build()


def figure_ids():
    """All known preset ids, in figure order."""
    return sorted(_PRESETS, key=lambda s: (int("".join(c for c in s[1:-1])), s[-1]))


def figure_preset(fid: str) -> SweepConfig:
    """SweepConfig for a figure panel id such as 'f2a' (case-insensitive)."""
    key = fid.strip().lower()
    if key not in _PRESETS:
        raise UnknownFigure(f"unknown figure id {fid!r}; known: {', '.join(figure_ids())}")
    return _PRESETS[key][0]()


def figure_description(fid: str) -> str:
    key = fid.strip().lower()
    if key not in _PRESETS:
        raise UnknownFigure(f"unknown figure id {fid!r}")
    return _PRESETS[key][1]
