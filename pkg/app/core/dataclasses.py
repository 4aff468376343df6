from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from app.core.exceptions import ValidationException


def _csr_from_pairs(rows: np.ndarray, cols: np.ndarray, shape: tuple[int, int]) -> sparse.csr_matrix:
    """
    Builds a 0/1 CSR matrix with sorted, duplicate-free rows.

    Args:
        rows (np.ndarray): Row indices
        cols (np.ndarray): Column indices
        shape (tuple[int, int]): Matrix shape

    Returns:
        sparse.csr_matrix: Canonical-format matrix with unit data
    """
    data = np.ones(len(rows), dtype=np.int32)
    matrix = sparse.coo_matrix((data, (rows, cols)), shape=shape).tocsr()
    matrix.sum_duplicates()
    matrix.sort_indices()
    matrix.data[:] = 1
    return matrix


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """
    Node/attribute graph B = (V, A, E) underlying a random intersection graph.

    The incidence matrix has one row per node and one column per attribute.
    Both orientations are kept in canonical CSR form, so each adjacency list
    is sorted and duplicate-free.

    Attributes:
        n_nodes (int): |V|
        n_attributes (int): |A|
        incidence (sparse.csr_matrix): node -> attributes view (n x m)
        transposed (sparse.csr_matrix): attribute -> nodes view (m x n)
    """

    n_nodes: int
    n_attributes: int
    incidence: sparse.csr_matrix = field(repr=False)
    transposed: sparse.csr_matrix = field(repr=False)

    @classmethod
    def from_incidences(
        cls, n_nodes: int, n_attributes: int, nodes: Iterable[int], attributes: Iterable[int]
    ) -> "BipartiteGraph":
        """
        Creates a bipartite graph from parallel node/attribute index sequences.

        Args:
            n_nodes (int): Number of nodes
            n_attributes (int): Number of attributes
            nodes (Iterable[int]): Node index of each incidence
            attributes (Iterable[int]): Attribute index of each incidence

        Returns:
            BipartiteGraph: Graph with duplicates collapsed

        Raises:
            ValidationException: If an index is out of range
        """
        node_idx = np.asarray(list(nodes) if not isinstance(nodes, np.ndarray) else nodes, dtype=np.int64)
        attr_idx = np.asarray(
            list(attributes) if not isinstance(attributes, np.ndarray) else attributes, dtype=np.int64
        )
        if node_idx.shape != attr_idx.shape:
            raise ValidationException("node and attribute index sequences differ in length")
        if node_idx.size and (node_idx.min() < 0 or node_idx.max() >= n_nodes):
            raise ValidationException(f"node index out of range [0, {n_nodes})")
        if attr_idx.size and (attr_idx.min() < 0 or attr_idx.max() >= n_attributes):
            raise ValidationException(f"attribute index out of range [0, {n_attributes})")
        incidence = _csr_from_pairs(node_idx, attr_idx, (n_nodes, n_attributes))
        transposed = _csr_from_pairs(attr_idx, node_idx, (n_attributes, n_nodes))
        return cls(n_nodes=n_nodes, n_attributes=n_attributes, incidence=incidence, transposed=transposed)

    @property
    def edge_count(self) -> int:
        return int(self.incidence.nnz)

    def attribute_neighbors(self, attribute: int) -> np.ndarray:
        """Sorted node indices of N_B(attribute)."""
        if not 0 <= attribute < self.n_attributes:
            raise IndexError(f"attribute {attribute} out of range")
        return self.transposed.indices[self.transposed.indptr[attribute] : self.transposed.indptr[attribute + 1]]

    def node_neighbors(self, node: int) -> np.ndarray:
        """Sorted attribute indices of N_B(node)."""
        if not 0 <= node < self.n_nodes:
            raise IndexError(f"node {node} out of range")
        return self.incidence.indices[self.incidence.indptr[node] : self.incidence.indptr[node + 1]]

    @property
    def attribute_degrees(self) -> np.ndarray:
        return np.diff(self.transposed.indptr)

    @property
    def node_degrees(self) -> np.ndarray:
        return np.diff(self.incidence.indptr)

    def incidences(self) -> Iterator[tuple[int, int]]:
        """
        Yields (attribute, node) pairs ordered by attribute, then node.

        Returns:
            Iterator[tuple[int, int]]: Incidences in canonical order
        """
        for attribute in range(self.n_attributes):
            for node in self.attribute_neighbors(attribute):
                yield attribute, int(node)


@dataclass(frozen=True, eq=False)
class IntersectionGraph:
    """
    Simple undirected graph stored as symmetric CSR adjacency.

    Attributes:
        n_vertices (int): |V|
        indptr (np.ndarray): CSR row pointers
        indices (np.ndarray): Concatenated sorted neighbor lists
    """

    n_vertices: int
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)

    @classmethod
    def from_csr(cls, matrix: sparse.spmatrix) -> "IntersectionGraph":
        """
        Creates a graph from a square sparse matrix, ignoring the diagonal and values.

        Args:
            matrix (sparse.spmatrix): Adjacency-like matrix, symmetrized here

        Returns:
            IntersectionGraph: Simple graph on matrix.shape[0] vertices
        """
        coo = sparse.coo_matrix(matrix)
        keep = coo.row != coo.col
        rows = np.concatenate([coo.row[keep], coo.col[keep]])
        cols = np.concatenate([coo.col[keep], coo.row[keep]])
        csr = _csr_from_pairs(rows, cols, (coo.shape[0], coo.shape[0]))
        return cls(
            n_vertices=coo.shape[0],
            indptr=csr.indptr.astype(np.int64),
            indices=csr.indices.astype(np.int64),
        )

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> "IntersectionGraph":
        """
        Creates a graph from an edge list; parallel edges collapse.

        Args:
            n_vertices (int): Number of vertices
            edges (Iterable[tuple[int, int]]): Undirected edges

        Returns:
            IntersectionGraph: Simple graph

        Raises:
            ValidationException: On self-loops or out-of-range endpoints
        """
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if pairs.size:
            if pairs.min() < 0 or pairs.max() >= n_vertices:
                raise ValidationException(f"edge endpoint out of range [0, {n_vertices})")
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise ValidationException("self-loops are not allowed")
        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        csr = _csr_from_pairs(rows, cols, (n_vertices, n_vertices))
        return cls(
            n_vertices=n_vertices,
            indptr=csr.indptr.astype(np.int64),
            indices=csr.indices.astype(np.int64),
        )

    @property
    def edge_count(self) -> int:
        return int(len(self.indices) // 2)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, vertex: int) -> np.ndarray:
        if not 0 <= vertex < self.n_vertices:
            raise IndexError(f"vertex {vertex} out of range [0, {self.n_vertices})")
        return self.indices[self.indptr[vertex] : self.indptr[vertex + 1]]

    def adjacency_sets(self) -> list[set[int]]:
        """Mutable per-vertex neighbor sets, for algorithms that edit a private copy."""
        return [set(self.neighbors(v).tolist()) for v in range(self.n_vertices)]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return bool(pos < len(row) and row[pos] == v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yields each edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n_vertices):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def csr(self) -> sparse.csr_matrix:
        data = np.ones(len(self.indices), dtype=np.int8)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n_vertices, self.n_vertices))


@dataclass(frozen=True, eq=False)
class CoreDecomposition:
    """
    Degeneracy ordering and core numbers.

    Attributes:
        order (np.ndarray): Vertices in removal order, earliest first
        core_number (np.ndarray): Core number per vertex
        degeneracy (int): Maximum core number
    """

    order: np.ndarray
    core_number: np.ndarray
    degeneracy: int

    @property
    def position(self) -> np.ndarray:
        """Position of each vertex in the removal order."""
        position = np.empty(len(self.order), dtype=np.int64)
        position[self.order] = np.arange(len(self.order))
        return position


@dataclass(frozen=True, eq=False)
class ComponentLabeling:
    """
    Connected components of a graph.

    Attributes:
        label (np.ndarray): Component id per vertex
        sizes (np.ndarray): Vertex count per component id
        giant (int): Id of the largest component, smallest id on ties (-1 for empty graphs)
    """

    label: np.ndarray
    sizes: np.ndarray
    giant: int

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, component: int) -> np.ndarray:
        """Sorted vertices of the given component."""
        if not 0 <= component < self.count:
            raise IndexError(f"component {component} out of range")
        return np.flatnonzero(self.label == component)
