"""
Breadth-first traversal of the logic AST (frozen dataclasses), yielding
each node together with its parent, in the manner of ``ast.walk``.
"""
import dataclasses
from collections import deque
from typing import Any, Iterator, Optional, Tuple


def walk(node: Any) -> Iterator[Tuple[Any, Optional[Any]]]:
    """
    Recursively yield ``(node, parent)`` for *node* and all its
    descendants; the root's parent is None.
    """
    todo = deque([(node, None)])
    while todo:
        node, parent = todo.popleft()
        todo.extend(iterChildNodes(node))
        yield node, parent


def iterChildNodes(node: Any) -> Iterator[Tuple[Any, Any]]:
    """
    Yield ``(child, node)`` for every field of *node* that is an AST node,
    and for every AST node inside tuple-valued fields.
    """
    if not dataclasses.is_dataclass(node):
        return

    for field in dataclasses.fields(node):
        value = getattr(node, field.name)
        if _isNode(value):
            yield value, node
        elif isinstance(value, tuple):
            for item in value:
                if _isNode(item):
                    yield item, node


def _isNode(value: Any) -> bool:
    from skewchain.logic.ast import Node

    return isinstance(value, Node)
