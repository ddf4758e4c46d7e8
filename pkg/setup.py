from setuptools import find_packages
from setuptools import setup

REQUIRED_PACKAGES = [
  'numpy',
  'tqdm',
  'colorama',
  'sympy'
]

setup(
    name='glab',
    version='0.1',
    install_requires=REQUIRED_PACKAGES,
    extras_require={'test': ['pytest', 'hypothesis']},
    packages=find_packages(include=['glab', 'glab.*']),
    include_package_data=True,
    description='Exact checks on families of lines in Grassmannians',
    entry_points={'console_scripts': ['glab=glab.bot.cli:main']},
    requires=[]
)
