"""운송수단별 layer 입력과 다중모드 그래프 조립"""

from .clustering import ClusterMap, assemble, cluster_junctions
from .layers import Junction, JunctionLayer, Link

__all__ = ["ClusterMap", "assemble", "cluster_junctions", "Junction", "JunctionLayer", "Link"]
