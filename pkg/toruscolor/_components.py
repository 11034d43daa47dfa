import inspect
import typing
from typing import Any, Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Type, TypeVar

from toruscolor._components_config import (
    ComponentConfig, ComponentError, RefValue, ToolkitConfig, check_toolkit_config,
    load_toolkit_config,
)
from toruscolor._validation import ValidationError, make_validator

T = TypeVar('T')

_NO_DEFAULT = object()
_BUILDING = object()


class Parameter(NamedTuple):
    name: str
    default: Any
    validator: Callable[[Any], Any]

    @property
    def required(self) -> bool:
        return self.default is _NO_DEFAULT


class Impl(NamedTuple):
    """A named factory (class or function) and the parameters its signature declares."""

    name: str
    factory: Callable[..., Any]
    params: Mapping[str, Parameter]


def impl(name: str, factory: Callable[..., Any]) -> Impl:
    """
    :raises ValueError: the factory takes `*args` / `**kwargs` or positional-only parameters
    """

    hints = _annotations(factory)
    params = {}
    for parameter in inspect.signature(factory).parameters.values():
        if parameter.kind not in (parameter.POSITIONAL_OR_KEYWORD, parameter.KEYWORD_ONLY):
            raise ValueError(f'{name}: parameter {parameter.name!r} cannot be configured by name')

        default = _NO_DEFAULT if parameter.default is parameter.empty else parameter.default
        params[parameter.name] = Parameter(parameter.name, default, make_validator(hints.get(parameter.name, Any)))

    return Impl(name, factory, params)


class ComponentSpec:
    """Implementations components can be built from, by unique name."""

    def __init__(self, impls: Iterable[Impl] = ()):
        self._impls: Dict[str, Impl] = {}
        for item in impls:
            self.add(item)

    def add(self, item: Impl) -> None:
        if item.name in self._impls:
            raise ValueError(f'Implementation {item.name!r} is registered twice')
        self._impls[item.name] = item

    def start(self, config: Any) -> 'Container':
        """
        :raises UnknownImpl
        :raises UnknownParam
        """

        toolkit_config = load_toolkit_config(config)
        check_toolkit_config(toolkit_config, self._impls)
        return Container(dict(self._impls), toolkit_config)


class Container:
    """Builds each configured component on first request and keeps it."""

    def __init__(self, impls: Mapping[str, Impl], config: ToolkitConfig):
        self._impls = impls
        self._config = config
        self._built: Dict[str, Any] = {}

    def get(self, name: str, check_type: Optional[Type[T]] = None) -> T:
        """
        :raises ComponentError
        """

        component = self._build(name, ())
        if check_type is None:
            return component

        try:
            return make_validator(check_type)(component)
        except ValidationError as e:
            raise InvalidComponentType(name, check_type, component) from e

    def _build(self, name: str, chain: Tuple[str, ...]) -> Any:
        chain += (name,)
        built = self._built.get(name, _NO_DEFAULT)
        if built is _BUILDING:
            raise DependencyCycle(chain)
        if built is not _NO_DEFAULT:
            return built

        config = self._config.components.get(name, ComponentConfig(name, {}))
        factory_impl = self._impls.get(config.impl_name)
        if factory_impl is None:
            raise MissingValue(chain)

        self._built[name] = _BUILDING
        try:
            kwargs = {
                param.name: self._argument(name, param, config.parameters, chain)
                for param in factory_impl.params.values()
            }
            built = factory_impl.factory(**kwargs)
        except BaseException:
            del self._built[name]
            raise

        self._built[name] = built
        return built

    def _argument(self, name: str, param: Parameter, configured: Mapping[str, Any], chain: Tuple[str, ...]) -> Any:
        if param.name in configured:
            value = configured[param.name]
            if isinstance(value, RefValue):
                value = self._build(value.name, chain)
        elif not param.required:
            value = param.default
        else:
            # auto-wired by parameter name
            value = self._build(param.name, chain)

        try:
            return param.validator(value)
        except ValidationError as e:
            raise InvalidImplParam(name, param.name, e.expected_type, e.value) from e


def _annotations(factory: Callable[..., Any]) -> Dict[str, Any]:
    target = factory.__init__ if inspect.isclass(factory) else factory
    hints = typing.get_type_hints(target)
    hints.pop('return', None)
    return hints


class MissingValue(ComponentError):
    """Nothing is configured, defaulted or registered under a name a build needs."""

    def __init__(self, chain: Tuple[str, ...]):
        self.chain = chain

    def __str__(self) -> str:
        if len(self.chain) == 1:
            return f'No component or implementation named {self.chain[0]!r}'

        *owners, param = self.chain
        path: List[str] = [repr(owner) for owner in owners]
        return f'Component {owners[-1]!r} needs {param!r}, which is not configured (building {" -> ".join(path)})'


class DependencyCycle(ComponentError):
    def __init__(self, chain: Tuple[str, ...]):
        self.chain = chain

    def __str__(self) -> str:
        return 'Components depend on each other: ' + ' -> '.join(self.chain)


class InvalidImplParam(ComponentError):
    def __init__(self, component: str, param_name: str, expected_type: Any, value: Any):
        self.component = component
        self.param_name = param_name
        self.expected_type = expected_type
        self.value = value

    def __str__(self) -> str:
        return f'{self.component}.{self.param_name} should be {self.expected_type}, got {self.value!r}'


class InvalidComponentType(ComponentError):
    def __init__(self, component: str, expected_type: Any, value: Any):
        self.component = component
        self.expected_type = expected_type
        self.value = value

    def __str__(self) -> str:
        return f'Component {self.component!r} should be {self.expected_type}, got {self.value!r}'
