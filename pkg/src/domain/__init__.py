"""Domain layer - 领域层

谐振子链、高斯态与 QET 协议的数值核心，不依赖任何基础设施
"""
