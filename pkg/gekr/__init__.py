"""Нижние границы и построения для частичных 3-покрывающих массивов со свойством GEKR."""

__version__ = "1.0.0"
