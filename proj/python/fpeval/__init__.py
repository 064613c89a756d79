# Copyright 2026 The fpeval Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fingerprint masking evaluation.

Thin wrapper over the compiled extension; see ``fpeval._fpeval`` for the
full list of functions.
"""

from importlib import resources as _resources

from fpeval._fpeval import *  # noqa: F401,F403
from fpeval._fpeval import FpevalError, load_model


def bundled_model_path(name="tor_handcrafted"):
    """Path of a model json shipped with the package."""
    return str(_resources.files(__name__) / "data" / f"{name}.json")


def load_bundled_model(name="tor_handcrafted"):
    return load_model(bundled_model_path(name))


__all__ = [name for name in dir() if not name.startswith("_")]
