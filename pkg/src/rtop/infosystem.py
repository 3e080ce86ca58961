"""Information systems with set-valued attributes.

Each attribute assigns every object a non-empty finite set of value
labels. An attribute relates two objects when their value sets overlap,
which makes every attribute relation reflexive and symmetric. Ordinary
single-valued tables are the special case where every value set is a
singleton, so overlap degenerates to equality.
"""
from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Mapping

from .core import Subset, Universe
from .errors import DocumentError
from .relations import BinaryRelation
from .topology import Subbase, Topology, subbase_from_relation
from .coverings import Covering


class InformationSystem:
    """Objects crossed with named set-valued attributes."""

    __slots__ = ("_objects", "_attributes", "_values")

    def __init__(
        self,
        objects: Universe,
        attributes: Iterable[tuple[str, Mapping[str, Iterable[str]]]],
    ):
        names: list[str] = []
        values: dict[str, tuple[frozenset[str], ...]] = {}
        for name, table in attributes:
            if name in values:
                raise ValueError(f"duplicate attribute name {name!r}")
            per_object: list[frozenset[str]] = []
            for label in objects.labels:
                if label not in table:
                    raise ValueError(
                        f"attribute {name!r} has no value for object {label!r}"
                    )
                vset = frozenset(str(v) for v in table[label])
                if not vset:
                    raise ValueError(
                        f"attribute {name!r} has an empty value set for {label!r}"
                    )
                per_object.append(vset)
            extra = set(table) - set(objects.labels)
            if extra:
                raise ValueError(f"attribute {name!r} mentions unknown objects {sorted(extra)}")
            names.append(name)
            values[name] = tuple(per_object)
        self._objects = objects
        self._attributes = tuple(names)
        self._values = values

    @property
    def objects(self) -> Universe:
        return self._objects

    @property
    def attributes(self) -> tuple[str, ...]:
        return self._attributes

    def value_set(self, attribute: str, obj: str) -> frozenset[str]:
        return self._values[self._check_attr(attribute)][self._objects.index(obj)]

    def _check_attr(self, attribute: str) -> str:
        if attribute not in self._values:
            raise ValueError(f"unknown attribute {attribute!r}")
        return attribute

    # derivations ---------------------------------------------------------------
    def relation_for_attribute(self, attribute: str) -> BinaryRelation:
        """x related to y iff their value sets under the attribute overlap."""
        vals = self._values[self._check_attr(attribute)]
        n = self._objects.size
        rows = [0] * n
        for i in range(n):
            for j in range(i, n):
                if vals[i] & vals[j]:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return BinaryRelation(self._objects, rows)

    def attribute_subbase(self, attribute: str) -> Subbase:
        return subbase_from_relation(self.relation_for_attribute(attribute))

    def attribute_topology(self, attribute: str) -> Topology:
        return Topology.from_subbase(self.attribute_subbase(attribute))

    def attribute_covering(self, attribute: str) -> Covering:
        rel = self.relation_for_attribute(attribute)
        universe = self._objects
        return Covering(universe, (Subset(universe, row) for row in rel.rows))

    def combined_topology(self, attrs: Iterable[str] | None = None) -> Topology:
        """Topology generated by the union of the chosen attribute subbases.

        Defaults to all attributes. Adding attributes can only refine the
        result, never coarsen it.
        """
        if attrs is None:
            chosen = list(self._attributes)
        else:
            chosen = [self._check_attr(a) for a in attrs]
        if not chosen:
            raise ValueError("at least one attribute is required")
        members = []
        for a in chosen:
            members.extend(self.attribute_subbase(a).members)
        return Topology.from_subbase(Subbase(self._objects, members))

    # I/O ------------------------------------------------------------------
    def to_doc(self) -> dict:
        return {
            "objects": list(self._objects.labels),
            "attributes": [
                {
                    "name": name,
                    "values": {
                        label: sorted(self._values[name][i])
                        for i, label in enumerate(self._objects.labels)
                    },
                }
                for name in self._attributes
            ],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> InformationSystem:
        if not isinstance(doc, dict) or "objects" not in doc or "attributes" not in doc:
            raise ValueError(
                'information system document must be {"objects": [...], "attributes": [...]}'
            )
        objects = Universe(doc["objects"])
        attributes = []
        for entry in doc["attributes"]:
            if "name" not in entry or "values" not in entry:
                raise ValueError('each attribute needs {"name": ..., "values": {...}}')
            attributes.append((entry["name"], entry["values"]))
        return cls(objects, attributes)

    @classmethod
    def from_csv(cls, text: str) -> InformationSystem:
        """Parse the CSV form: header `object,a1,a2,...`, cells `v1|v2|v3`."""
        reader = csv.reader(io.StringIO(text))
        try:
            header = next(reader)
        except StopIteration:
            raise DocumentError("empty CSV document", line=1) from None
        if len(header) < 2 or header[0].strip() != "object":
            raise DocumentError(
                "CSV header must be 'object,<attribute>,...'", line=1
            )
        attr_names = [h.strip() for h in header[1:]]
        objects: list[str] = []
        columns: list[dict[str, list[str]]] = [{} for _ in attr_names]
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise DocumentError(
                    f"expected {len(header)} cells, found {len(row)}", line=lineno
                )
            obj = row[0].strip()
            objects.append(obj)
            for k, cell in enumerate(row[1:]):
                vals = [v.strip() for v in cell.split("|") if v.strip()]
                if not vals:
                    raise DocumentError(
                        f"empty value set for object {obj!r}, attribute {attr_names[k]!r}",
                        line=lineno,
                    )
                columns[k][obj] = vals
        try:
            universe = Universe(objects)
            return cls(universe, list(zip(attr_names, columns)))
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
