try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, Mapping, NamedTuple

from toruscolor._types import ToruscolorError

_impl_keyword = '-impl'
_ref_keyword = '-ref'


class ComponentConfig(NamedTuple):
    impl_name: str
    parameters: Dict[str, Any]


class ToolkitConfig(NamedTuple):
    components: Dict[str, ComponentConfig]


class RefValue:
    """Parameter value naming another component."""

    def __init__(self, name: str):
        self._name = name

    @property
    def name(self) -> str:
        return self._name

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RefValue) and other._name == self._name

    def __repr__(self) -> str:
        return f'RefValue({self._name!r})'


def load_toolkit_config(value: Any) -> ToolkitConfig:
    if not isinstance(value, dict):
        raise TypeError('toolkit config should be dict', type(value))

    return ToolkitConfig(
        components={
            name: _load_component_config(name, component_conf)
            for name, component_conf in value.items()
        },
    )


def read_toolkit_config(path: Path) -> Dict[str, Any]:
    """Raw config mapping from a TOML file, one table per component."""

    with open(path, 'rb') as config_file:
        return tomllib.load(config_file)


def with_overrides(value: Mapping[str, Any], overrides: Mapping[str, Mapping[str, Any]]) -> Dict[str, Any]:
    """
    Raw config with some component options replaced.

    An override that selects another `-impl` replaces the component's options altogether.
    """

    merged = {name: dict(options) for name, options in value.items()}
    for name, options in overrides.items():
        current = merged.get(name, {})
        if _impl_keyword in options and options[_impl_keyword] != current.get(_impl_keyword, name):
            current = {}
        merged[name] = {**current, **options}

    return merged


def check_toolkit_config(config: ToolkitConfig, impls: Mapping[str, Any]) -> None:
    """
    :raises UnknownImpl
    :raises UnknownParam
    """

    for name, component_config in config.components.items():
        impl = impls.get(component_config.impl_name)
        if impl is None:
            raise UnknownImpl(name, component_config.impl_name)

        for param_name in component_config.parameters:
            if param_name not in impl.params:
                raise UnknownParam(component_config.impl_name, param_name)


def _load_component_config(component_name: str, params_value: Any) -> ComponentConfig:
    if not isinstance(params_value, dict):
        raise TypeError('component description should be dict', component_name, type(params_value))

    params_value = params_value.copy()
    impl_name = params_value.pop(_impl_keyword, component_name)
    parameters = {
        param_name: _load_param_value(param_value)
        for param_name, param_value in params_value.items()
    }
    return ComponentConfig(impl_name=impl_name, parameters=parameters)


def _load_param_value(value: Any) -> Any:
    if not isinstance(value, dict) or _ref_keyword not in value:
        return value

    if len(value) != 1:
        raise ValueError(f'{_ref_keyword} should be the only property')
    name = value[_ref_keyword]
    if not isinstance(name, str):
        raise TypeError(f'{_ref_keyword} should be str')

    return RefValue(name)


class ComponentError(ToruscolorError):
    pass


class UnknownImpl(ComponentError):
    def __init__(self, component: str, impl_name: str):
        self.component = component
        self.impl_name = impl_name

    def __str__(self) -> str:
        return f'Component {self.component!r} selects unknown implementation {self.impl_name!r}'


class UnknownParam(ComponentError):
    def __init__(self, impl_name: str, param_name: str):
        self.impl_name = impl_name
        self.param_name = param_name

    def __str__(self) -> str:
        return f'Implementation {self.impl_name!r} has no parameter {self.param_name!r}'
