import os
import logging
import numpy as np
from importlib import import_module
from termcolor import colored
from core.exceptions import ParameterError, UsageError

logger = logging.getLogger(__name__)


def module_names(name):
    """
    'gaussian-dilation' -> ('gaussiandilation', 'GaussianDilation')
    """
    parts = name.replace('_', '-').split('-')
    return ''.join(parts).lower(), ''.join(part.capitalize() for part in parts)


def load_module(module_prefix, module_name):
    """
    Loads a plug-in class (phase, experiment) based on its hyphenated name.
    """
    if module_name is None:
        print(colored('Not provided module, please add it as an argument or in config file', 'red'))
        raise UsageError('missing module name for ' + module_prefix.rstrip('.'))
    file_name, class_name = module_names(module_name)
    try:
        mod = import_module(module_prefix + file_name)
    except ImportError:
        raise UsageError('unknown ' + module_prefix.rstrip('.') + ' module: ' + module_name)
    module_class = getattr(mod, class_name, None)
    if module_class is None:
        raise UsageError('module ' + module_prefix + file_name + ' has no class ' + class_name)
    return module_class


def load_phase(name, coefficients=None):
    """
    Instantiates a builtin phase; general-quadratic takes (c_xx, c_xeta, c_etaeta)
    """
    phase_class = load_module('phases.', name)
    if coefficients:
        return phase_class(*coefficients)
    return phase_class()


def geometric_sweep(lo, hi, points_per_octave):
    """
    Geometric λ sweep with a fixed number of points per octave, both ends included
    """
    if not 0 < lo < hi:
        raise ParameterError('sweep needs 0 < lo < hi, got ' + str((lo, hi)))
    octaves = np.log2(hi / lo)
    count = int(round(octaves * points_per_octave)) + 1
    return np.geomspace(lo, hi, max(count, 2))


def parse_floats(text):
    """
    '0.125, 0.5' -> [0.125, 0.5]
    """
    if isinstance(text, (list, tuple)):
        return [float(x) for x in text]
    return [float(x) for x in str(text).replace(' ', '').split(',') if x]


def ensure_dir(path):
    if path and not os.path.exists(path):
        os.makedirs(path)
    return path
